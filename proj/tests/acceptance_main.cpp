#include "octaves/acceptance.hpp"

#include <algorithm>
#include <iostream>

int main() {
    const auto results = octaves::acceptance::run_all();
    std::cout << octaves::acceptance::render(results, true);
    const bool ok = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed(); });
    return ok ? 0 : 1;
}
