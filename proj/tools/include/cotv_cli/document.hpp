#pragma once

// JSON input documents: a divisorial fan with ids for every cell and cone,
// plus named support functions and weights.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cotv/mweights.hpp"
#include "cotv/suppfn.hpp"

namespace cotv::cli {

using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

// Malformed or inconsistent input (exit code 2).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Document {
  DivisorialFan df;
  std::vector<std::vector<std::string>> cell_ids;  // per point, per slice cell
  std::vector<std::string> cone_ids;               // per recession cone
  std::vector<std::pair<std::string, SupportFunction>> functions;
  std::vector<std::pair<std::string, Weight>> weights;

  std::size_t point(const std::string& label) const;
  std::size_t cell(std::size_t point, const std::string& id) const;
  std::size_t cone(const std::string& id) const;
  const SupportFunction* function(const std::string& name) const;
  const Weight* weight(const std::string& name) const;
};

Document parse_document(const Json& j);
Json serialize(const Document& doc);

// Exact numerals: integers as JSON integers when they fit in 64 bits and as
// strings otherwise; non-integral rationals as "p/q" strings.
Json to_json(const Integer& x);
Json to_json(const Rational& x);
Json to_json(const IntVector& v);
Json to_json(const RatVector& v);
Integer integer_from(const Json& j);
Rational rational_from(const Json& j);

// "(1,-1/2)" style coordinates; a bare number in rank one.
std::string coordinates(const RatVector& v);

// The index as a JSON object with ids, e.g. {"kind":"vertical","point":"0","cell":"v0_0"}.
Json index_json(const Document& doc, const WeightIndex& w);
std::string index_label(const Document& doc, const WeightIndex& w);
WeightIndex index_from(const Document& doc, const Json& j);

Json weight_json(const Document& doc, const Weight& w, bool include_zero);
Json function_json(const Document& doc, const SupportFunction& h);

}  // namespace cotv::cli
