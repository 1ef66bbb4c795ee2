#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spalg/tensor.hpp"

namespace spalg {

/// Parsed contents of an input file: optional field declaration, ordered
/// variable list, at most one potential, any number of relation tensors, and
/// named automorphism matrices.
struct ParsedInput {
    Field field;
    std::vector<std::string> vars;
    std::optional<Tensor> w;
    std::vector<Tensor> relations;
    std::vector<std::pair<std::string, Matrix>> automorphisms;
};

/// Parses the statement grammar
///   file := fielddecl? varsdecl stmt+
///   stmt := ("w" | "rel" | "aut" ident) "=" expr ";"
/// Errors carry "parse error at line L, column C".  When `force_field` is
/// set it must agree with any field declaration in the text.
ParsedInput parse_input(const std::string& text,
                        const std::optional<Field>& force_field = std::nullopt);

/// Exact, re-parseable renderings.
std::string render_scalar(const Scalar& s);
std::string render_tensor(const Tensor& t, const std::vector<std::string>& vars);
std::string render_matrix(const Matrix& m);

}  // namespace spalg
