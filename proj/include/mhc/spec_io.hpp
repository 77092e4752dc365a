#pragma once

#include "mhc/monogenic.hpp"

#include <json.hpp>

#include <memory>
#include <optional>
#include <string>

namespace mhc {

/// Malformed spec document. `where` is a JSON pointer into the document, or
/// "line L, column C" for syntax errors.
class SpecError : public std::runtime_error {
public:
    SpecError(std::string where, const std::string& what)
        : std::runtime_error(where + ": " + what), where_(std::move(where)) {}
    const std::string& where() const { return where_; }

private:
    std::string where_;
};

struct ParsedSpec {
    std::string name;
    nlohmann::json document;
    std::shared_ptr<MonogenicAlgebra> algebra;
    std::shared_ptr<Bimodule> bimodule;  // null means M = A
    std::optional<Vec> lambda_breve;
};

/// Builds and validates the algebra described by a spec document. Throws
/// SpecError for structural problems and ValidationError for algebraic ones.
ParsedSpec parse_spec(const nlohmann::json& doc);
/// Parses text (reporting line and column of syntax errors).
ParsedSpec parse_spec_text(const std::string& text);

/// Names accepted by `example`: trunc:n, sweedler, taft:n, rank1:c4,
/// rank1nc:c2xc4, rank1nc:c8, dihedral:u. Throws std::invalid_argument.
nlohmann::json example_spec(const std::string& name);
/// Short aliases used on the command line (trunc3, taft3, rank1c4, dihedral6
/// meaning the dihedral group of order 6, ...), mapped to example names.
std::optional<std::string> resolve_alias(const std::string& name);
/// --spec argument: an existing file, an example name, or an alias.
ParsedSpec load_spec(const std::string& path_or_name);

/// The six fixtures shipped under fixtures/.
const std::vector<std::string>& shipped_fixtures();

/// Scalar and K-vector encodings used by spec files.
Scalar parse_scalar(const nlohmann::json& j, const Field* f, const std::string& where);
nlohmann::json scalar_to_json(const Scalar& s);

}  // namespace mhc
