#ifndef UMBRA_JSON_IO_HPP
#define UMBRA_JSON_IO_HPP

#include <json.hpp>

#include "umbra/hopf.hpp"
#include "umbra/operators.hpp"
#include "umbra/powerseries.hpp"
#include "umbra/species.hpp"
#include "umbra/symfunc.hpp"

namespace umbra {

using nlohmann::json;

/* Wire formats.  Rationals ride as decimal strings so nothing overflows in
 * transit:
 *   Partition      [3,1,1]                ([] is the empty partition)
 *   SymFunc        {"coeffs":[{"part":[3,1],"num":"7","den":"2"}, ...]}
 *   FPSeries       {"truncation":12,"coeffs":["1","1","1/2", ...]}
 *   QuasiSpecies   {"a":["1","1","3","16"]}
 *   QuasiGenus     {"G":[{"part":[2,1],"val":"3"}, ...]}
 *   ShiftInvOp     [{"part":[2,1],"coeff":"1/2"}, ...]
 *   TensorElem     [{"left":[2],"right":[1,1],"num":"1","den":"1"}, ...]
 *   UniPoly        {"coeffs":["0","1","1/2"]}          (x^k at index k)
 */

json partition_to_json(const Partition& p);
Partition partition_from_json(const json& j);

json symfunc_to_json(const SymFunc& f);
SymFunc symfunc_from_json(const json& j);

json fpseries_to_json(const FPSeries& f);
FPSeries fpseries_from_json(const json& j);

json species_to_json(const QuasiSpecies& s);
QuasiSpecies species_from_json(const json& j);

json genus_to_json(const QuasiGenus& g);
QuasiGenus genus_from_json(const json& j);

json op_to_json(const ShiftInvOp& f);
ShiftInvOp op_from_json(const json& j);

json tensor_to_json(const TensorElem& t);
TensorElem tensor_from_json(const json& j);

json unipoly_to_json(const UniPoly& p);
UniPoly unipoly_from_json(const json& j);

json shifted_to_json(const ShiftedPoly& p);

}  // namespace umbra

#endif
