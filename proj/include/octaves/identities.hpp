#pragma once

// N-square identities derived from algebra multiplication tables.
//
// For an algebra of dimension n with basis e0..e_{n-1}, the product
// (sum a_i e_{i-1})(sum b_j e_{j-1}) has coordinates z_1..z_n that are
// bilinear in the a and b variables. The identity
//
//     (a1^2 + ... + an^2)(b1^2 + ... + bn^2) = z_1^2 + ... + z_n^2
//
// holds exactly when the residual (sum a^2)(sum b^2) - sum z^2 expands to the
// zero polynomial. For n = 2 the forms are z1 = a1b1 - a2b2 and
// z2 = a2b1 + a1b2, i.e. (ac - bd, bc + ad) with a = a1, b = a2, c = b1, d = b2.

#include "octaves/cayley_dickson.hpp"
#include "octaves/fano_octonions.hpp"
#include "octaves/symbolic.hpp"

#include <string>
#include <vector>

namespace octaves::identities {

/// Variable id of a_i (i = 1..16) and b_j (j = 1..16).
symbolic::VarId a_var(int i);
symbolic::VarId b_var(int j);
/// Names "a1".."a16", "b1".."b16".
const symbolic::VariableNames& variable_names();

struct NSquareIdentity {
    int n = 0;
    std::vector<symbolic::Poly> forms;
    symbolic::Poly residual;
};

/// From the level-log2(n) Cayley-Dickson algebra; n in {1, 2, 4, 8, 16}.
/// n = 16 yields the sedenion residual, which is not zero.
NSquareIdentity derive_identity(int n);

/// n = 8 from an octonion table. Throws std::invalid_argument if the table
/// does not validate.
NSquareIdentity derive_identity(const fano::MultTable& table);

/// Residual is the zero polynomial.
bool verify_identity(const NSquareIdentity& id);

/// Every monomial of every form has degree 1 in the a block and 1 in the b block.
bool is_bilinear(const NSquareIdentity& id);

enum class Format { text, json };

/// Textbook rendering, or JSON with each z_k as a list of {sign, a, b}
/// terms. Throws std::invalid_argument for an identity that does not verify.
std::string emit_identity(const NSquareIdentity& id, Format format);

} // namespace octaves::identities
