#ifndef FRESCO_IO_HPP
#define FRESCO_IO_HPP

#include <fresco/fresco_lab.hpp>
#include <fresco/operator_algebra.hpp>
#include <fresco/pole_ledger.hpp>

#include <json.hpp>

#include <string>
#include <vector>

namespace fresco
{

using Json = nlohmann::json;

/// Reads a whole file as JSON; InvalidInput on I/O or syntax errors.
Json read_json_file(const std::string &path);

Json to_json(const XiSpace &space);
XiSpace space_from_json(const Json &j);

/// {"alpha_set": [...], "log_bound": N, "value_dim": d, "cert_degree": D, "terms": [...]}
Json to_json(const XiElement &x);
XiElement element_from_json(const Json &j);

/// Module input: either one element (its fresco B[a]x) or
/// {"generators": [element, ...], "closure": ["A", "B"]}.
struct ModuleInput {
    std::vector<XiElement> generators;
    std::vector<Generator> closure{Generator::A, Generator::B};
};
ModuleInput module_from_json(const Json &j);
Json to_json(const ModuleInput &m);

/// {"trunc_order": Q, "rows": {"q": [c_0, c_1, ...]}}
Json to_json(const ABOperator &p);
ABOperator operator_from_json(const Json &j);

/// {"word": [{"linear": "3"}, {"unit": ["1", "1"], "inverted": true}]}
Json to_json(const StructureWord &w);
StructureWord word_from_json(const Json &j);

/// {"monic_coeffs": [...], "factors": [{"root": "-3/2", "mult": 2}]}; factors
/// are omitted when the polynomial does not split over Q.
Json to_json(const RationalPolynomial &p);

Json to_json(const JordanHolderData &jh);
Json to_json(const PoleProfile &p);

} // namespace fresco

#endif
