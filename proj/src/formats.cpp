#include "octaves/formats.hpp"

#include "json.hpp"

#include <stdexcept>

namespace octaves::formats {

using Json = nlohmann::ordered_json;

std::string table_to_json(const fano::MultTable& t) {
    Json rows = Json::array();
    for (int i = 0; i < 8; ++i) {
        Json row = Json::array();
        for (int j = 0; j < 8; ++j) {
            row.push_back(fano::encode_entry(t(i, j)));
        }
        rows.push_back(std::move(row));
    }
    Json doc;
    doc["format"] = "octonion-table";
    doc["entries"] = std::move(rows);
    return doc.dump(2);
}

fano::MultTable table_from_json(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument(std::string("table JSON does not parse: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("entries")) {
        throw std::invalid_argument("table JSON needs an \"entries\" array");
    }
    const Json& rows = doc["entries"];
    if (!rows.is_array() || rows.size() != 8) {
        throw std::invalid_argument("table JSON needs 8 rows");
    }
    fano::MultTable t;
    for (int i = 0; i < 8; ++i) {
        const Json& row = rows[static_cast<std::size_t>(i)];
        if (!row.is_array() || row.size() != 8) {
            throw std::invalid_argument("table row " + std::to_string(i) + " needs 8 entries");
        }
        for (int j = 0; j < 8; ++j) {
            const Json& cell = row[static_cast<std::size_t>(j)];
            if (!cell.is_number_integer()) {
                throw std::invalid_argument("table entries must be integers");
            }
            t.set(i, j, fano::decode_entry(cell.get<int>()));
        }
    }
    return t;
}

std::string subspaces_to_json(int n, int q, int k, const std::vector<geometry::Subspace>& subspaces) {
    Json list = Json::array();
    for (const geometry::Subspace& s : subspaces) {
        list.push_back(s.point_strings());
    }
    Json doc;
    doc["n"] = n;
    doc["q"] = q;
    doc["k"] = k;
    doc["count"] = subspaces.size();
    doc["subspaces"] = std::move(list);
    return doc.dump(2);
}

SubspaceListing subspaces_from_json(const std::string& text) {
    const Json doc = Json::parse(text);
    SubspaceListing listing;
    listing.n = doc.at("n").get<int>();
    listing.q = doc.at("q").get<int>();
    listing.k = doc.at("k").get<int>();
    listing.subspaces = doc.at("subspaces").get<std::vector<std::vector<std::string>>>();
    if (doc.at("count").get<std::size_t>() != listing.subspaces.size()) {
        throw std::invalid_argument("subspace count does not match the listing");
    }
    return listing;
}

std::string reformat_json(const std::string& text) { return Json::parse(text).dump(2); }

} // namespace octaves::formats
