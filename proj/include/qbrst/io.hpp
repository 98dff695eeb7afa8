#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"

#include "qbrst/brst.hpp"
#include "qbrst/glq.hpp"
#include "qbrst/qla.hpp"

namespace qbrst {

using Json = nlohmann::ordered_json;

struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// {"legs":[{"dim":d,"kind":"in"|"out"}],"entries":[{"idx":[1-based],"val":"<scalar>"}]}
Json to_json(const Tensor& t);
Tensor tensor_from_json(const Json& j);

// {"n_gen":n,"sigma":<tensor>,"C":<tensor>}
Json to_json(const QuantumLieAlgebra& a);
QuantumLieAlgebra qla_from_json(const Json& j);

// [{"word":[["omega",[1,2]],...],"coeff":"<scalar>"}]; abstract families use one index
Json to_json(const NCPoly& p, const GeneratorAlphabet& al);
NCPoly ncpoly_from_json(const Json& j, const GeneratorAlphabet& al);

Json to_json(const XTower& xt);
Json to_json(const IdentityReport& r);  // list of {"name","residual_terms","expr_terms","seconds"}

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}
