#include "cotv_cli/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "cotv/error.hpp"
#include "cotv/pairing.hpp"
#include "cotv/toricoracle.hpp"
#include "cotv_cli/datasets.hpp"
#include "cotv_cli/document.hpp"

namespace cotv::cli {

namespace {

// Raised once an output document has been produced with a non-zero exit code.
struct Failure {
  int code;
  Json result;
  std::string message;
};

struct Options {
  std::string input;
  std::string output;
  std::string format = "json";
  bool strict = false;
  std::string command;
  std::vector<std::string> positional;
  long codim = -1;
  bool all = false;
  std::string ray, cell, sf, weight;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Document load(const Options& o, const std::function<std::string()>& read_stdin) {
  const std::string text = o.input.empty() || o.input == "-" ? read_stdin() : read_file(o.input);
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return parse_document(j);
}

Json messages_json(const std::vector<std::string>& msgs) {
  Json out = Json::array();
  for (const auto& m : msgs) out.push_back(m);
  return out;
}

void require_valid_fan(const Document& doc, const Options& o) {
  const auto msgs = validate_fan(doc.df, o.strict);
  if (!msgs.empty())
    throw Failure{kValidationFailure, Json{{"valid", false}, {"fan", {{"messages", messages_json(msgs)}}}},
                  "the divisorial fan is invalid"};
}

// "SF(u=1,2;D=0:1,inf:-1)"
SupportFunction inline_sf(const Document& doc, const std::string& spec) {
  if (spec.size() < 4 || spec.rfind("SF(", 0) != 0 || spec.back() != ')') throw ParseError("bad function " + spec);
  const std::string body = spec.substr(3, spec.size() - 4);
  IntVector u(doc.df.rank(), Integer(0));
  std::vector<Integer> d(doc.df.num_points(), Integer(0));
  std::stringstream parts(body);
  std::string part;
  auto split = [](const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, sep)) out.push_back(item);
    return out;
  };
  auto integer = [&](const std::string& s) {
    Integer x;
    if (s.empty() || x.set_str(s, 10) != 0) throw ParseError("bad integer \"" + s + "\" in " + spec);
    return x;
  };
  while (std::getline(parts, part, ';')) {
    if (part.empty()) continue;
    const auto eq = part.find('=');
    if (eq == std::string::npos) throw ParseError("expected key=value in " + spec);
    const std::string key = part.substr(0, eq), value = part.substr(eq + 1);
    if (key == "u") {
      const auto xs = split(value, ',');
      if (xs.size() != u.size()) throw ParseError("u needs " + std::to_string(u.size()) + " entries in " + spec);
      for (std::size_t i = 0; i < xs.size(); ++i) u[i] = integer(xs[i]);
    } else if (key == "D") {
      for (const auto& term : split(value, ',')) {
        const auto colon = term.rfind(':');
        if (colon == std::string::npos) throw ParseError("expected point:coefficient in " + spec);
        d[doc.point(term.substr(0, colon))] += integer(term.substr(colon + 1));
      }
    } else {
      throw ParseError("unknown key \"" + key + "\" in " + spec);
    }
  }
  Integer total = 0;
  for (const auto& x : d) total += x;
  if (total != 0) throw ParseError("D must have degree zero in " + spec);
  return principal_sf(doc.df, u, d);
}

SupportFunction resolve_sf(const Document& doc, const std::string& name) {
  SupportFunction h;
  if (const auto* f = doc.function(name)) {
    h = *f;
  } else if (name.rfind("SF(", 0) == 0) {
    h = inline_sf(doc, name);
  } else {
    throw ParseError("unknown support function \"" + name + "\"");
  }
  const auto msgs = validate_sf(doc.df, h);
  if (!msgs.empty())
    throw Failure{kValidationFailure, Json{{"function", name}, {"valid", false}, {"messages", messages_json(msgs)}},
                  "support function " + name + " is invalid"};
  return h;
}

Weight resolve_weight(const Document& doc, const std::string& name) {
  if (const auto* w = doc.weight(name)) return *w;
  if (name == "cX") return fundamental_weight(doc.df);
  throw ParseError("unknown weight \"" + name + "\"");
}

Json residuals_json(const Document& doc, const BalancingReport& report) {
  Json out = Json::array();
  for (const auto& e : report.entries) {
    Json j;
    j["condition"] = e.condition;
    j["location"] = index_label(doc, e.location);
    j["basis"] = e.basis;
    j["residual"] = to_json(e.residual);
    j["rendered"] = e.rendered();
    out.push_back(std::move(j));
  }
  return out;
}

// ---- commands ---------------------------------------------------------------

Json cmd_validate(const Document& doc, const Options& o) {
  const auto fan_msgs = validate_fan(doc.df, o.strict);
  bool valid = fan_msgs.empty();
  Json functions = Json::array();
  Json weights = Json::array();
  if (fan_msgs.empty()) {
    for (const auto& [name, h] : doc.functions) {
      const auto msgs = validate_sf(doc.df, h);
      valid = valid && msgs.empty();
      functions.push_back({{"name", name}, {"valid", msgs.empty()}, {"messages", messages_json(msgs)}});
    }
    for (const auto& [name, w] : doc.weights)
      weights.push_back({{"name", name}, {"codim", w.codim}, {"balanced", check_balancing(doc.df, w).balanced()}});
  }
  Json result;
  result["valid"] = valid;
  result["strict"] = o.strict;
  result["lattice_rank"] = doc.df.rank();
  result["marked_points"] = doc.df.num_points();
  result["recession_cones"] = doc.df.recession().size();
  result["contraction_free"] = doc.df.contraction_free();
  result["fan"] = {{"messages", messages_json(fan_msgs)}};
  result["support_functions"] = std::move(functions);
  result["weights"] = std::move(weights);
  if (!valid) throw Failure{kValidationFailure, result, "the document is invalid"};
  return result;
}

Json cmd_ranks(const Document& doc, const Options& o) {
  require_valid_fan(doc, o);
  const long top = static_cast<long>(doc.df.rank()) + 1;
  if (o.codim != -1 && (o.codim < 0 || o.codim > top))
    throw ParseError("--codim must lie between 0 and " + std::to_string(top));
  Json ranks = Json::array();
  for (long k = 0; k <= top; ++k) {
    if (o.codim != -1 && k != o.codim) continue;
    const auto basis = weight_basis(doc.df, static_cast<std::size_t>(k));
    ranks.push_back({{"codim", k}, {"indices", basis.domain.size()}, {"rank", basis.rank()}});
  }
  return Json{{"ranks", std::move(ranks)}};
}

Json cmd_check_weight(const Document& doc, const Options& o) {
  require_valid_fan(doc, o);
  const std::string& name = o.positional.at(0);
  const Weight c = resolve_weight(doc, name);
  const auto report = check_balancing(doc.df, c);
  Json result;
  result["weight"] = name;
  result["codim"] = c.codim;
  result["balanced"] = report.balanced();
  result["violations"] = report.violations().size();
  result["conditions"] = residuals_json(doc, report);
  if (!report.balanced()) throw Failure{kValidationFailure, result, "weight " + name + " is not balanced"};
  return result;
}

Json cmd_pair(const Document& doc, const Options& o) {
  require_valid_fan(doc, o);
  const SupportFunction h = resolve_sf(doc, o.positional.at(0));
  const Weight c = resolve_weight(doc, o.positional.at(1));
  const Weight w = pair(doc.df, h, c);
  Json result;
  result["function"] = o.positional.at(0);
  result["weight"] = o.positional.at(1);
  result["zero"] = is_zero(w);
  result["pairing"] = weight_json(doc, w, true);
  return result;
}

Json cmd_top(const Document& doc, const Options& o) {
  require_valid_fan(doc, o);
  const SupportFunction h = resolve_sf(doc, o.positional.at(0));
  const Integer inductive = top_intersection(doc.df, h);
  const Rational integral = integral_formula(doc.df, h, measure_of(doc.df, h));
  Json result;
  result["function"] = o.positional.at(0);
  result["inductive"] = to_json(inductive);
  result["integral"] = to_json(integral);
  result["equal"] = Rational(inductive) == integral;
  if (Rational(inductive) != integral) throw Failure{kValidationFailure, result, "the two routes disagree"};
  return result;
}

Json cmd_measure(const Document& doc, const Options& o) {
  require_valid_fan(doc, o);
  const SupportFunction h = resolve_sf(doc, o.positional.at(0));
  const Measure mu = measure_of(doc.df, h);
  Json masses = Json::array();
  for (const auto& [idx, m] : mu.masses) {
    Json e = index_json(doc, idx);
    if (idx.kind == WeightIndex::Kind::Vertical)
      e["vertex"] = coordinates(doc.df.slice(idx.point).cell(idx.id).vertices().front());
    e["mass"] = to_json(m);
    masses.push_back(std::move(e));
  }
  Json result;
  result["function"] = o.positional.at(0);
  result["masses"] = std::move(masses);
  result["integral"] = to_json(integral_formula(doc.df, h, mu));
  return result;
}

std::string divisor_label(const Document& doc, const WeightIndex& idx) {
  if (idx.kind == WeightIndex::Kind::Vertical)
    return "Z[" + doc.df.points()[idx.point] + "," +
           coordinates(doc.df.slice(idx.point).cell(idx.id).vertices().front()) + "]";
  return "B[" + doc.cone_ids[idx.id] + "]";
}

Json cmd_weil(const Document& doc, const Options& o) {
  require_valid_fan(doc, o);
  const SupportFunction h = resolve_sf(doc, o.positional.at(0));
  const auto expansion = weil_expansion(doc.df, h);
  std::vector<std::pair<WeightIndex, Integer>> terms(expansion.begin(), expansion.end());
  // Invariant prime divisors of horizontal type first.
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    return (a.first.kind == WeightIndex::Kind::Horizontal) > (b.first.kind == WeightIndex::Kind::Horizontal);
  });
  Json list = Json::array();
  Json compact = Json::object();
  for (const auto& [idx, coeff] : terms) {
    Json e;
    e["divisor"] = divisor_label(doc, idx);
    e["index"] = index_json(doc, idx);
    e["coefficient"] = to_json(coeff);
    list.push_back(std::move(e));
    compact[divisor_label(doc, idx)] = to_json(coeff);
  }
  Json result;
  result["function"] = o.positional.at(0);
  result["expansion"] = std::move(compact);
  result["terms"] = std::move(list);
  return result;
}

Json cmd_principal(const Document& doc, const Options& o) {
  require_valid_fan(doc, o);
  const SupportFunction h = resolve_sf(doc, o.positional.at(0));
  const auto data = is_principal(doc.df, h);
  Json result;
  result["function"] = o.positional.at(0);
  result["principal"] = data.has_value();
  if (data) {
    result["u"] = to_json(data->u);
    Json d = Json::object();
    for (std::size_t p = 0; p < data->d.size(); ++p) d[doc.df.points()[p]] = to_json(data->d[p]);
    result["D"] = std::move(d);
  }
  return result;
}

Json cmd_restrict(const Document& doc, const Options& o) {
  require_valid_fan(doc, o);
  if (o.ray.empty() == o.cell.empty()) throw ParseError("restrict needs exactly one of --ray and --cell");
  if (o.sf.empty() && o.weight.empty()) throw ParseError("restrict needs --sf and/or --weight");
  Json result;
  if (!o.ray.empty()) {
    const std::size_t tau = doc.cone(o.ray);
    const auto star = star_fan_horizontal(doc.df, tau);
    // Name star cells and cones after their origin.
    Document local;
    local.df = star.fan;
    for (std::size_t p = 0; p < star.cell_origin.size(); ++p) {
      local.cell_ids.emplace_back();
      for (auto c : star.cell_origin[p]) local.cell_ids.back().push_back(doc.cell_ids[p][c]);
    }
    for (auto c : star.cone_origin) local.cone_ids.push_back(doc.cone_ids[c]);
    result["ray"] = o.ray;
    result["star"] = {{"lattice_rank", star.fan.rank()}, {"document", serialize(local)}};
    if (!o.sf.empty()) {
      const auto r = restrict_horizontal_sf(doc.df, resolve_sf(doc, o.sf), tau);
      result["function"] = {{"name", o.sf}, {"m_tau", to_json(r.m_tau)}, {"restriction", function_json(local, r.function)}};
    }
    if (!o.weight.empty()) {
      const auto r = restrict_weight_horizontal(doc.df, resolve_weight(doc, o.weight), tau);
      result["weight"] = {{"name", o.weight}, {"restriction", weight_json(local, r.weight, true)}};
    }
    return result;
  }
  const auto comma = o.cell.find(',');
  if (comma == std::string::npos) throw ParseError("--cell expects point,cell");
  const std::size_t p = doc.point(o.cell.substr(0, comma));
  const std::size_t c = doc.cell(p, o.cell.substr(comma + 1));
  const auto star = star_fan_vertical(doc.df, p, c);
  Json cones = Json::array();
  for (std::size_t s = 0; s < star.fan.size(); ++s) {
    Json rays = Json::array();
    for (const auto& r : star.fan.cell(s).rays()) rays.push_back(to_json(r));
    cones.push_back({{"cell", doc.cell_ids[p][star.origin[s]]}, {"rays", std::move(rays)}});
  }
  result["cell"] = o.cell;
  result["star"] = {{"lattice_rank", star.fan.rank()}, {"cones", std::move(cones)}};
  if (!o.sf.empty()) {
    const auto r = restrict_vertical_sf(doc.df, resolve_sf(doc, o.sf), p, c);
    Json fs = Json::array();
    for (const auto& [s, m] : r.functionals) fs.push_back({{"cell", doc.cell_ids[p][star.origin[s]]}, {"functional", to_json(m)}});
    result["function"] = {{"name", o.sf},
                          {"normalizer", {{"slope", to_json(r.normalizer.slope)}, {"translation", to_json(r.normalizer.translation)}}},
                          {"functionals", std::move(fs)}};
  }
  if (!o.weight.empty()) {
    const auto r = restrict_weight_vertical(doc.df, resolve_weight(doc, o.weight), p, c);
    Json vs = Json::array();
    for (const auto& [s, v] : r.weight.values) vs.push_back({{"cell", doc.cell_ids[p][star.origin[s]]}, {"value", to_json(v)}});
    result["weight"] = {{"name", o.weight}, {"codim", r.weight.codim}, {"values", std::move(vs)}};
  }
  return result;
}

Json cmd_oracle_check(const Document& doc, const Options& o) {
  require_valid_fan(doc, o);
  const SupportFunction h = resolve_sf(doc, o.positional.at(0));
  const auto hf = homogenize_fan(doc.df);
  const ConeFunctional f = transport(doc.df, hf, h);
  const std::size_t n = doc.df.rank();
  bool agree = true;
  Json rows = Json::array();
  Weight w = fundamental_weight(doc.df);
  std::vector<ConeFunctional> fs;
  for (std::size_t j = 1; j <= n + 1; ++j) {
    w = pair(doc.df, h, w);
    fs.push_back(f);
    for (const auto& idx : index_sets(doc.df, static_cast<long>(j)).all()) {
      const Rational oracle = toric_degree_on_orbit(hf.fan, hf.cone_of(idx), fs);
      const bool same = oracle == Rational(w.at(idx));
      agree = agree && same;
      rows.push_back({{"codim", j}, {"index", index_label(doc, idx)}, {"pair", to_json(w.at(idx))},
                      {"oracle", to_json(oracle)}, {"agree", same}});
    }
  }
  const Integer top = top_intersection(doc.df, h);
  const Rational toric = toric_intersection(hf.fan, std::vector<ConeFunctional>(n + 1, f));
  agree = agree && toric == Rational(top);
  Json ranks = Json::array();
  for (std::size_t k = 0; k <= n + 1; ++k) {
    const std::size_t a = weight_basis(doc.df, k).rank(), b = toric_weight_rank(hf.fan, k);
    agree = agree && a == b;
    ranks.push_back({{"codim", k}, {"rank", a}, {"toric_rank", b}, {"agree", a == b}});
  }
  Json result;
  result["function"] = o.positional.at(0);
  result["agree"] = agree;
  result["top"] = {{"inductive", to_json(top)}, {"toric", to_json(toric)}, {"agree", toric == Rational(top)}};
  result["ranks"] = std::move(ranks);
  result["comparison"] = std::move(rows);
  if (!agree) throw Failure{kValidationFailure, result, "the toric model disagrees"};
  return result;
}

// ---- output -----------------------------------------------------------------

std::string scalar_text(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

bool is_table(const Json& j) {
  if (!j.is_array() || j.empty()) return false;
  return std::all_of(j.begin(), j.end(), [](const Json& e) {
    return e.is_object() && std::all_of(e.begin(), e.end(), [](const Json& v) { return !v.is_structured(); });
  });
}

void render(const Json& j, std::size_t indent, std::ostringstream& out);

void render_table(const Json& rows, std::size_t indent, std::ostringstream& out) {
  std::vector<std::string> cols;
  for (const auto& r : rows)
    for (const auto& [k, v] : r.items())
      if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
  std::vector<std::size_t> width;
  for (const auto& c : cols) width.push_back(c.size());
  std::vector<std::vector<std::string>> cells;
  for (const auto& r : rows) {
    cells.emplace_back();
    for (std::size_t i = 0; i < cols.size(); ++i) {
      cells.back().push_back(r.contains(cols[i]) ? scalar_text(r.at(cols[i])) : "");
      width[i] = std::max(width[i], cells.back().back().size());
    }
  }
  auto line = [&](const std::vector<std::string>& xs) {
    std::string s(indent, ' ');
    for (std::size_t i = 0; i < xs.size(); ++i) {
      s += xs[i];
      if (i + 1 < xs.size()) s += std::string(width[i] - xs[i].size() + 2, ' ');
    }
    while (!s.empty() && s.back() == ' ') s.pop_back();
    out << s << "\n";
  };
  line(cols);
  for (const auto& r : cells) line(r);
}

void render(const Json& j, std::size_t indent, std::ostringstream& out) {
  const std::string pad(indent, ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (!v.is_structured()) {
        out << pad << k << ": " << scalar_text(v) << "\n";
      } else if (v.empty()) {
        out << pad << k << ": (none)\n";
      } else {
        out << pad << k << ":\n";
        render(v, indent + 2, out);
      }
    }
  } else if (is_table(j)) {
    render_table(j, indent, out);
  } else if (j.is_array()) {
    for (const auto& e : j) {
      if (!e.is_structured()) {
        out << pad << "- " << scalar_text(e) << "\n";
      } else {
        out << pad << "-\n";
        render(e, indent + 2, out);
      }
    }
  } else {
    out << pad << scalar_text(j) << "\n";
  }
}

std::string format_output(const Json& doc, const std::string& format) {
  if (format == "table") {
    std::ostringstream out;
    render(doc, 0, out);
    return out.str();
  }
  return doc.dump(2) + "\n";
}

Json envelope(const std::string& command) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  return j;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::MarkedFan:
    case ErrorCode::MarkedCone:
    case ErrorCode::NotTwoPoints:
      return kUnsupported;
    case ErrorCode::UnbalancedInput:
      return kValidationFailure;
    default:
      return kMalformedInput;
  }
}

}  // namespace

RunResult run(const std::vector<std::string>& args, const std::function<std::string()>& read_stdin) {
  Options o;
  CLI::App app{"Intersection theory of complete rational complexity-one T-varieties", "cotv"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("-i,--input", o.input, "input document (default: stdin)");
  app.add_option("-o,--output", o.output, "write the output document to a file");
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "table"}));
  app.add_flag("--strict", o.strict, "require every marked slice to differ from the recession fan");

  auto positional = [&](CLI::App* sub, const std::string& name, const std::string& help) {
    sub->add_option(name, o.positional, help)->required();
  };
  app.add_subcommand("validate", "validate the document");
  auto* ranks = app.add_subcommand("ranks", "ranks of the groups of balanced weights");
  auto* codim = ranks->add_option("--codim", o.codim, "a single codimension");
  ranks->add_flag("--all", o.all, "every codimension (default)")->excludes(codim);
  positional(app.add_subcommand("check-weight", "check the balancing conditions"), "weight", "weight name or cX");
  auto* pair_cmd = app.add_subcommand("pair", "pair a support function with a weight");
  pair_cmd->add_option("args", o.positional, "function and weight")->required()->expected(2);
  positional(app.add_subcommand("top", "top self-intersection number, both routes"), "function", "function");
  positional(app.add_subcommand("measure", "the measure of a support function"), "function", "function");
  positional(app.add_subcommand("weil", "the invariant Weil divisor of a support function"), "function", "function");
  positional(app.add_subcommand("principal", "decide whether a support function is principal"), "function",
             "function");
  auto* restrict_cmd = app.add_subcommand("restrict", "restrict to the star of a ray or a slice cell");
  restrict_cmd->add_option("--ray", o.ray, "cone id");
  restrict_cmd->add_option("--cell", o.cell, "point,cell");
  restrict_cmd->add_option("--sf", o.sf, "support function");
  restrict_cmd->add_option("--weight", o.weight, "weight");
  positional(app.add_subcommand("oracle-check", "compare with the toric model (two points)"), "function",
             "function");
  positional(app.add_subcommand("gen-example", "write a bundled dataset"), "name",
             "hirzebruch2, three-point or marked-cone");

  RunResult res;
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    const int code = app.exit(e, out, err);
    res.out = out.str();
    res.err = err.str();
    res.code = code == 0 ? kSuccess : kMalformedInput;
    return res;
  }
  o.command = app.get_subcommands().front()->get_name();

  Json doc = envelope(o.command);
  try {
    if (o.command == "gen-example") {
      doc = serialize(parse_document(dataset_json(o.positional.at(0))));
    } else {
      const Document input = load(o, read_stdin);
      Json result;
      if (o.command == "validate") result = cmd_validate(input, o);
      else if (o.command == "ranks") result = cmd_ranks(input, o);
      else if (o.command == "check-weight") result = cmd_check_weight(input, o);
      else if (o.command == "pair") result = cmd_pair(input, o);
      else if (o.command == "top") result = cmd_top(input, o);
      else if (o.command == "measure") result = cmd_measure(input, o);
      else if (o.command == "weil") result = cmd_weil(input, o);
      else if (o.command == "principal") result = cmd_principal(input, o);
      else if (o.command == "restrict") result = cmd_restrict(input, o);
      else result = cmd_oracle_check(input, o);
      doc["result"] = std::move(result);
    }
  } catch (const Failure& f) {
    res.code = f.code;
    doc["result"] = f.result;
    res.err = "cotv: " + f.message + "\n";
  } catch (const ParseError& e) {
    res.code = kMalformedInput;
    doc["error"] = {{"code", "MalformedInput"}, {"message", e.what()}};
    res.err = std::string("cotv: ") + e.what() + "\n";
  } catch (const Error& e) {
    res.code = exit_code_for(e.code());
    std::string message = e.what();
    const std::string prefix = std::string(to_string(e.code())) + ": ";
    if (message.rfind(prefix, 0) == 0) message.erase(0, prefix.size());
    doc["error"] = {{"code", to_string(e.code())}, {"message", message}};
    res.err = std::string("cotv: ") + e.what() + "\n";
  }

  const std::string text = format_output(doc, o.format);
  if (o.output.empty()) {
    res.out = text;
  } else {
    std::ofstream out(o.output, std::ios::binary);
    if (!out) {
      res.err += "cotv: cannot write " + o.output + "\n";
      res.code = kMalformedInput;
      res.out = text;
    } else {
      out << text;
    }
  }
  return res;
}

}  // namespace cotv::cli
