#pragma once

// Catalog of verifiable identities. Each record evaluates one or more
// labelled lhs/rhs pairs over a parameter grid; the residual reported for the
// record is the pair with the largest error relative to its tolerance.

#include "zwb/precision.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace zwb::catalog {

using Params = std::map<std::string, ExtReal>;

struct ParamSpec {
  std::string name;
  bool integer = false;
  std::optional<ExtReal> lo, hi;  // bounds, open unless the matching flag is set
  bool lo_closed = false, hi_closed = false;
  std::vector<ExtReal> excluded;
  std::string meaning;
};

struct Equation {
  std::string label;
  ExtReal lhs, rhs;
};

struct IdentityRecord {
  std::string id;
  std::string description;
  std::string anchor;  // verbatim quote locating the identity in its source
  std::vector<ParamSpec> params;
  std::vector<Params> default_grid;
  // Identities whose integrals carry log^k weights with k >= 5 pass at 10^-6.
  bool relaxed = false;
  // Extra domain restriction beyond the per-parameter bounds; returns an
  // error message, empty when the point is admissible.
  std::function<std::string(const Params&)> restrict;
  std::function<std::vector<Equation>(const Params&, const ExtReal& quad_tol)> evaluate;
};

struct Residual {
  std::string id;
  std::string label;  // equation and parameter point with the worst residual
  ExtReal lhs_value, rhs_value, abs_err, rel_err, tol;
  std::size_t evaluations = 0;
  bool pass = false;
  std::string error;  // non-empty when evaluation threw
};

// All records, sorted by id.
const std::vector<IdentityRecord>& catalog();

// nullptr when unknown. Resolves aliases.
const IdentityRecord* find(const std::string& id);

// Alias ids accepted by find() in addition to the record ids.
const std::map<std::string, std::string>& aliases();

// A record that always fails; used to exercise the failure paths.
const IdentityRecord& synthetic_failure();

// Quadrature tolerance used for a pass threshold `tol`.
ExtReal quadrature_tol(const ExtReal& tol);

// Pass threshold actually applied to a record.
ExtReal effective_tol(const IdentityRecord& r, const ExtReal& tol);

// Throws DomainError when the point lies outside the record's domain.
void validate_params(const IdentityRecord& r, const Params& p);

// Grid used for `given`: the default grid with the supplied names overridden.
std::vector<Params> expand_params(const IdentityRecord& r, const Params& given);

// Evaluates the record on expand_params(r, params). Throws ArgumentError for
// an unknown id and DomainError for parameters outside the domain;
// computational failures propagate.
Residual evaluate(const IdentityRecord& r, const Params& params, const ExtReal& tol);
Residual evaluate_identity(const std::string& id, const Params& params, const ExtReal& tol);

}  // namespace zwb::catalog
