// Canonical JSON serialization for every element family the tools expose.
// Output is deterministic: object keys appear in fixed insertion order and
// terms follow each family's canonical term order, so identical inputs give
// byte-identical documents.  Coefficients travel as decimal strings
// ("3", "-2", "1/2"); inputs may also use plain JSON integers.
#pragma once

#include <nlohmann/json.hpp>

#include "garland.hpp"
#include "kstab.hpp"

namespace afs {

using json = nlohmann::ordered_json;

std::string rat_str(const Rat& c);
Rat rat_from_json(const json& j);

json pvec_to_json(const PVec& v);
PVec pvec_from_json(const json& j);

json pmat_to_json(const PMat& A);
PMat pmat_from_json(const json& j);

json matlc_to_json(const MatLC& x);
MatLC matlc_from_json(const json& j);

json hkey_to_json(const HKey& k);
HKey hkey_from_json(const json& j);

json hyplc_to_json(const HypLC& x);
HypLC hyplc_from_json(const json& j);

// quotient-algebra elements carry their modulus alongside each index
json kbar_to_json(const KBarLC& x, const ModPContext& ctx);
KBarLC kbar_from_json(const json& j, const ModPContext& ctx);

json gpoly_to_json(const GPoly& f);
GPoly gpoly_from_json(const json& j);

Ring ring_from_code(const std::string& s);  // "Z", "Q", "Fp:<p>"

}  // namespace afs
