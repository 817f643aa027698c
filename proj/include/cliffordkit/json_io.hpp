#pragma once

#include <json.hpp>

#include "cliffordkit/endo.hpp"
#include "cliffordkit/matrix.hpp"
#include "cliffordkit/multivector.hpp"
#include "cliffordkit/spinor.hpp"

namespace cliffordkit {

using nlohmann::json;

/// Exact scalars serialize as {"re": "p/q", "im": "p/q"}; Float64 values as
/// {"re": <number>, "im": 0}.
json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const json& j);

/// {"n":, "q": ["1","-1",...], "algebra": "clifford"|"exterior",
///  "terms": [{"blades": [i..], "re":, "im":}, ...]} with terms in
/// graded-lexicographic blade order.
json multivector_to_json(const Multivector& a);
Multivector multivector_from_json(const json& j);

/// {"d":, "entries": [[{"re","im"},...],...], "parity":, "basis": [[..],..]}.
/// basis_parity drives the parity label; basis lists blade index sets when
/// provided.
json matrix_to_json(const OperatorMatrix& m,
                    const std::vector<int>* basis_parity = nullptr,
                    const std::vector<BladeBits>* basis = nullptr);
OperatorMatrix matrix_from_json(const json& j);

/// {"terms": [{"I": [...], "matrix": {...}}, ...], "residual_zero": bool}.
json decomposition_to_json(const DecompositionResult& dec, const TwistedModule& mod);

}  // namespace cliffordkit
