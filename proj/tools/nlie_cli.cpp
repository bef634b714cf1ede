/* Command-line front door: load and save algebra documents, run every
 * computation the library offers, and emit deterministic reports.
 *
 * Reports print as "key: value" text or, with --json, as a JSON object with
 * the same fields in the same order.  Commands that produce an algebra
 * (induce, extend, catalog with a full selector) print the algebra document
 * itself to stdout; with --output PATH they write the document to PATH and
 * print the report instead.
 *
 * Exit codes: 0 success, 1 a reported check failed, 2 usage or parse error.
 */
#include <CLI11.hpp>

#include "nlie/algebra.hpp"
#include "nlie/catalog.hpp"
#include "nlie/cohomology.hpp"
#include "nlie/extension.hpp"
#include "nlie/induce.hpp"
#include "nlie/io.hpp"
#include "nlie/report.hpp"
#include "nlie/reproduce.hpp"
#include "nlie/structure.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace {

using namespace nlie;

/// Bad arguments, bad specs, unreadable or malformed files: exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---- input -----------------------------------------------------------------

struct LoadedFile {
  AlgebraFile file;
  std::string digest;  ///< digest of the raw input bytes
};

LoadedFile load_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  try {
    return {parse_algebra_text(text), digest_hex(text)};
  } catch (const ParseError& e) {
    if (e.line() > 0)
      throw UsageError(path + ":" + std::to_string(e.line()) + ":" +
                       std::to_string(e.column()) + ": " + e.what());
    throw UsageError(path + ": " + e.what());
  }
}

// ---- rendering helpers -----------------------------------------------------

std::string join_1based(const std::vector<int>& idx) {
  std::string out;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(idx[i] + 1);
  }
  return out;
}

std::string render_vec(const Vec& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ",";
    out += v[i].str();
  }
  return out;
}

std::string render_brackets(const NLieAlgebra& a) {
  std::string out;
  for (const auto& [key, value] : a.sc()) {
    if (!out.empty()) out += "; ";
    out += "[" + join_1based(key.indices()) + "] = (" + render_vec(value) + ")";
  }
  return out.empty() ? "none" : out;
}

std::string series_dims(const SeriesReport& s) {
  std::string out;
  for (std::size_t i = 0; i < s.terms.size(); ++i) {
    if (i > 0) out += " > ";
    out += std::to_string(s.terms[i].dim());
  }
  return out;
}

std::string class_str(const std::optional<int>& c) {
  return c ? std::to_string(*c) : "none";
}

// ---- checks shared by the file-reading commands ----------------------------

/// Appends the fundamental-identity check; on a violation also records the
/// first failing tuple.  Returns true when the identity holds.
bool check_fi(Report& rep, const NLieAlgebra& a) {
  const std::vector<FiViolation> v = check_fundamental_identity(a);
  rep.add_check("fundamental identity", v.empty());
  if (!v.empty()) {
    rep.add("violations", std::to_string(v.size()));
    rep.add("first violating tuple",
            "x=(" + join_1based(v.front().x_indices) + ") y=(" +
                join_1based(v.front().y_indices) + ") residual=(" +
                render_vec(v.front().residual) + ")");
  }
  return v.empty();
}

int finish(const Report& rep, bool json) {
  std::cout << (json ? rep.to_json() : rep.to_text());
  return rep.ok() ? 0 : 1;
}

/// Prints the produced document to stdout, or writes it to `output` and
/// prints the report instead.
int emit_algebra(const AlgebraFile& produced, const std::string& output,
                 Report& rep, bool json) {
  const std::string text = render_algebra_text(produced);
  rep.add("output-digest", digest_hex(text));
  if (output.empty()) {
    std::cout << text;
    return rep.ok() ? 0 : 1;
  }
  std::ofstream out(output, std::ios::binary);
  if (!out) throw UsageError("cannot write " + output);
  out << text;
  rep.add("output", output);
  return finish(rep, json);
}

// ---- spec parsers ----------------------------------------------------------

/// Trace specs: either a covector literal "1,0,1,0" (one rational per basis
/// vector) or a sum of coordinate functionals "x1+x3" / "-x2", optionally
/// prefixed by an ignored preset label as in "gl2:x4".
TraceMap parse_trace_spec(std::string spec, int dim) {
  if (const std::size_t colon = spec.find(':'); colon != std::string::npos)
    spec = spec.substr(colon + 1);
  if (spec.empty()) throw UsageError("trace spec: empty");

  Vec coeffs(static_cast<std::size_t>(dim));
  if (spec.find('x') != std::string::npos) {
    std::size_t i = 0;
    while (i < spec.size()) {
      int sign = 1;
      if (spec[i] == '+') {
        ++i;
      } else if (spec[i] == '-') {
        sign = -1;
        ++i;
      }
      if (i >= spec.size() || spec[i] != 'x')
        throw UsageError("trace spec: expected an xK term at position " +
                         std::to_string(i + 1));
      ++i;
      const std::size_t start = i;
      while (i < spec.size() &&
             std::isdigit(static_cast<unsigned char>(spec[i])))
        ++i;
      if (start == i)
        throw UsageError("trace spec: missing index after x");
      const int k = std::stoi(spec.substr(start, i - start));
      if (k < 1 || k > dim)
        throw UsageError("trace spec: x" + std::to_string(k) +
                         " outside 1.." + std::to_string(dim));
      coeffs[static_cast<std::size_t>(k - 1)] += Rational(sign);
    }
    return TraceMap{std::move(coeffs)};
  }

  std::vector<std::string> parts;
  std::stringstream ss(spec);
  std::string part;
  while (std::getline(ss, part, ',')) parts.push_back(part);
  if (static_cast<int>(parts.size()) != dim)
    throw UsageError("trace spec: expected " + std::to_string(dim) +
                     " comma-separated rationals, got " +
                     std::to_string(parts.size()));
  for (std::size_t i = 0; i < parts.size(); ++i) {
    try {
      coeffs[i] = Rational::parse(parts[i]);
    } catch (const std::invalid_argument& e) {
      throw UsageError("trace spec: " + std::string(e.what()));
    }
  }
  return TraceMap{std::move(coeffs)};
}

/// Cocycle specs: semicolon-separated "i1,...,in=p/q" entries with 1-based
/// strictly increasing indices; an empty spec is the zero form.
ScalCochain2 parse_cocycle_spec(const std::string& spec,
                                const NLieAlgebra& a) {
  ScalCochain2 out;
  std::stringstream ss(spec);
  std::string entry;
  while (std::getline(ss, entry, ';')) {
    if (entry.empty()) continue;
    const std::size_t eq = entry.find('=');
    if (eq == std::string::npos)
      throw UsageError("cocycle spec: missing '=' in \"" + entry + "\"");
    std::vector<int> args;
    std::stringstream as(entry.substr(0, eq));
    std::string tok;
    while (std::getline(as, tok, ',')) {
      try {
        args.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        throw UsageError("cocycle spec: bad index \"" + tok + "\"");
      }
    }
    if (static_cast<int>(args.size()) != a.arity())
      throw UsageError("cocycle spec: expected " +
                       std::to_string(a.arity()) + " indices in \"" + entry +
                       "\"");
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (args[i] < 1 || args[i] > a.dim())
        throw UsageError("cocycle spec: index " + std::to_string(args[i]) +
                         " outside 1.." + std::to_string(a.dim()));
      if (i > 0 && args[i] <= args[i - 1])
        throw UsageError("cocycle spec: indices must be strictly increasing "
                         "in \"" +
                         entry + "\"");
      args[i] -= 1;
    }
    Rational value;
    try {
      value = Rational::parse(entry.substr(eq + 1));
    } catch (const std::invalid_argument& e) {
      throw UsageError("cocycle spec: " + std::string(e.what()));
    }
    MultiIndex key(args);
    if (out.count(key) > 0)
      throw UsageError("cocycle spec: duplicate key in \"" + entry + "\"");
    if (!value.is_zero()) out.emplace(key, value);
  }
  return out;
}

/// Catalog selectors: GROUP[/n=ARITY][/NAME][?param=p/q&...], for example
/// "lie4/M8", "filippov/n=3/3b", "bai/n=3/4f?beta=2/1".  "lie4" is accepted
/// for "lie4_solvable".
struct Selector {
  std::string group;
  int arity = 0;
  std::string name;
  std::vector<std::pair<std::string, Rational>> params;
};

Selector parse_selector(const std::string& text) {
  Selector sel;
  std::string path = text;
  std::string query;
  if (const std::size_t q = text.find('?'); q != std::string::npos) {
    path = text.substr(0, q);
    query = text.substr(q + 1);
  }

  std::vector<std::string> segs;
  std::stringstream ps(path);
  std::string seg;
  while (std::getline(ps, seg, '/')) segs.push_back(seg);
  if (segs.empty() || segs[0].empty())
    throw UsageError("selector: missing group");
  sel.group = segs[0] == "lie4" ? "lie4_solvable" : segs[0];
  for (std::size_t i = 1; i < segs.size(); ++i) {
    if (segs[i].rfind("n=", 0) == 0) {
      if (sel.arity != 0 || !sel.name.empty())
        throw UsageError("selector: misplaced \"" + segs[i] + "\"");
      try {
        sel.arity = std::stoi(segs[i].substr(2));
      } catch (const std::exception&) {
        throw UsageError("selector: bad arity in \"" + segs[i] + "\"");
      }
    } else if (sel.name.empty()) {
      sel.name = segs[i];
    } else {
      throw UsageError("selector: unexpected segment \"" + segs[i] + "\"");
    }
  }

  if (!query.empty()) {
    std::stringstream qs(query);
    std::string pair;
    while (std::getline(qs, pair, '&')) {
      const std::size_t eq = pair.find('=');
      if (eq == std::string::npos || eq == 0)
        throw UsageError("selector: bad parameter \"" + pair + "\"");
      try {
        sel.params.emplace_back(pair.substr(0, eq),
                                Rational::parse(pair.substr(eq + 1)));
      } catch (const std::invalid_argument& e) {
        throw UsageError("selector: " + std::string(e.what()));
      }
    }
  }
  return sel;
}

// ---- subcommands -----------------------------------------------------------

int cmd_check(const std::string& path, bool json) {
  LoadedFile lf = load_input(path);
  const NLieAlgebra& a = lf.file.algebra;
  Report rep;
  rep.command = "check";
  rep.input_digest = lf.digest;
  rep.add("arity", std::to_string(a.arity()));
  rep.add("dim", std::to_string(a.dim()));
  rep.add("brackets", std::to_string(a.sc().size()));

  bool normalized = true;
  for (const auto& [key, value] : a.sc()) {
    const std::vector<int>& idx = key.indices();
    for (std::size_t i = 1; i < idx.size(); ++i)
      normalized = normalized && idx[i - 1] < idx[i];
    bool nonzero = false;
    for (const Rational& x : value) nonzero = nonzero || !x.is_zero();
    normalized = normalized && nonzero;
  }
  rep.add_check("keys strictly increasing with nonzero values", normalized);
  check_fi(rep, a);
  return finish(rep, json);
}

int cmd_traces(const std::string& path, bool json) {
  LoadedFile lf = load_input(path);
  const NLieAlgebra& a = lf.file.algebra;
  Report rep;
  rep.command = "traces";
  rep.input_digest = lf.digest;
  if (!check_fi(rep, a)) return finish(rep, json);
  const Subspace ts = trace_space(a);
  rep.add("trace space dim", std::to_string(ts.dim()));
  for (std::size_t i = 0; i < ts.basis().size(); ++i)
    rep.add("b" + std::to_string(i + 1), render_vec(ts.basis()[i]));
  return finish(rep, json);
}

int cmd_induce(const std::string& path, const std::string& trace_spec,
               const std::string& output, bool json) {
  LoadedFile lf = load_input(path);
  const NLieAlgebra& a = lf.file.algebra;
  TraceMap tau = parse_trace_spec(trace_spec, a.dim());

  Report rep;
  rep.command = "induce";
  rep.input_digest = lf.digest;
  rep.add("trace", render_vec(tau.coeffs));
  if (!check_fi(rep, a)) return finish(rep, json);

  const bool tr = is_trace(a, tau);
  rep.add_check("functional vanishes on every bracket value", tr);
  if (!tr) {
    for (const auto& [key, value] : a.sc())
      if (!tau.apply(value).is_zero()) {
        rep.add("violating tuple", "(" + join_1based(key.indices()) + ")");
        break;
      }
    return finish(rep, json);
  }

  NLieAlgebra at = induce(a, tau);
  rep.add("result arity", std::to_string(at.arity()));
  rep.add("result dim", std::to_string(at.dim()));
  rep.add("result brackets", std::to_string(at.sc().size()));
  AlgebraFile produced{std::move(at), lf.file.basis_names};
  return emit_algebra(produced, output, rep, json);
}

int cmd_structure(const std::string& path, bool json) {
  LoadedFile lf = load_input(path);
  const NLieAlgebra& a = lf.file.algebra;
  Report rep;
  rep.command = "structure";
  rep.input_digest = lf.digest;
  rep.add("arity", std::to_string(a.arity()));
  rep.add("dim", std::to_string(a.dim()));
  if (!check_fi(rep, a)) return finish(rep, json);

  const Subspace full = Subspace::full(a.dim());
  rep.add("derived series", series_dims(derived_series(a, full)));
  rep.add("central series", series_dims(central_series(a, full)));
  rep.add("center dim", std::to_string(center(a).dim()));
  rep.add("solvability class", class_str(solvability_class(a)));
  rep.add("nilpotency class", class_str(nilpotency_class(a)));
  const InvariantSignature sig = invariant_signature(a);
  rep.add("derivation space dim", std::to_string(sig.derivation_dim));
  rep.add("inner derivation dim",
          std::to_string(sig.derivation_dim - sig.outer_derivation_dim));
  rep.add("outer derivation dim", std::to_string(sig.outer_derivation_dim));
  rep.add("trace space dim", std::to_string(trace_space(a).dim()));
  return finish(rep, json);
}

int cmd_cohomology(const std::string& path, int degree,
                   const std::string& coeffs, bool json) {
  LoadedFile lf = load_input(path);
  const NLieAlgebra& a = lf.file.algebra;
  const Coefficients c =
      coeffs == "adjoint" ? Coefficients::adjoint : Coefficients::scalar;
  Report rep;
  rep.command = "cohomology";
  rep.input_digest = lf.digest;
  rep.add("degree", std::to_string(degree));
  rep.add("coefficients", coeffs);
  if (!check_fi(rep, a)) return finish(rep, json);

  const Subspace z = cocycle_space(a, degree, c);
  const Subspace b = coboundary_space(a, degree, c);
  rep.add("dim Z", std::to_string(z.dim()));
  rep.add("dim B", std::to_string(b.dim()));
  rep.add("dim H", std::to_string(z.dim() - b.dim()));
  for (std::size_t i = 0; i < z.basis().size(); ++i)
    rep.add("z" + std::to_string(i + 1), render_vec(z.basis()[i]));
  return finish(rep, json);
}

int cmd_extend(const std::string& path, const std::string& cocycle_spec,
               const std::string& output, bool json) {
  LoadedFile lf = load_input(path);
  const NLieAlgebra& a = lf.file.algebra;
  ScalCochain2 omega = parse_cocycle_spec(cocycle_spec, a);

  Report rep;
  rep.command = "extend";
  rep.input_digest = lf.digest;
  rep.add("cocycle", cocycle_spec.empty() ? "0" : cocycle_spec);
  if (!check_fi(rep, a)) return finish(rep, json);

  const ScalCochain3 defect = d2_scalar(a, omega);
  const bool closed = all_zero(defect);
  rep.add_check("cocycle law (d2 vanishes)", closed);
  if (!closed) {
    for (const auto& [key, value] : defect)
      if (!value.is_zero()) {
        const auto& [xt, yt, zi] = key;
        rep.add("violating grid point",
                "x=(" + join_1based(xt.indices()) + ") y=(" +
                    join_1based(yt.indices()) + ") z=" +
                    std::to_string(zi + 1));
        break;
      }
    return finish(rep, json);
  }

  CentralExtension e = central_extend(a, omega);
  rep.add("result arity", std::to_string(e.total.arity()));
  rep.add("result dim", std::to_string(e.total.dim()));
  rep.add("central index", std::to_string(e.central_index + 1));
  rep.add("extension trivial", is_trivial_extension(a, omega) ? "yes" : "no");

  std::vector<std::string> names = lf.file.basis_names;
  if (!names.empty()) {
    std::string fresh = "c";
    for (int k = 2;
         std::find(names.begin(), names.end(), fresh) != names.end(); ++k)
      fresh = "c" + std::to_string(k);
    names.push_back(fresh);
  }
  AlgebraFile produced{std::move(e.total), std::move(names)};
  return emit_algebra(produced, output, rep, json);
}

int cmd_recognize(const std::string& path, bool json) {
  LoadedFile lf = load_input(path);
  const NLieAlgebra& a = lf.file.algebra;
  if (a.arity() < 3)
    throw UsageError("recognize: the criterion reduces the arity by one and "
                     "needs arity at least 3, got " +
                     std::to_string(a.arity()));
  Report rep;
  rep.command = "recognize";
  rep.input_digest = lf.digest;
  if (!check_fi(rep, a)) return finish(rep, json);

  const std::optional<RecognitionResult> res = recognize_induced(a);
  if (res) {
    rep.add("recognized", "yes");
    rep.add("pivot", "e" + std::to_string(res->pivot_index + 1));
    rep.add("trace", render_vec(res->trace.coeffs));
    rep.add("reduced arity", std::to_string(res->reduced.arity()));
    rep.add("reduced brackets", render_brackets(res->reduced));
    rep.add_check("round-trip reproduces the input",
                  induce(res->reduced, res->trace) == a);
  } else {
    rep.add("recognized", "no (criterion fails in this basis)");
    const bool obstructed = can_be_induced_obstruction(a);
    rep.add("provably not induced",
            obstructed ? "yes (derived subalgebra is not abelian)"
                       : "no (inconclusive)");
  }
  return finish(rep, json);
}

int cmd_catalog(const std::string& selector, const std::string& output,
                bool json) {
  Report rep;
  rep.command = "catalog";

  if (selector.empty()) {
    // overview: entries per group
    std::vector<std::pair<std::string, int>> groups;
    for (const CatalogEntry& e : full_catalog()) {
      auto it = std::find_if(groups.begin(), groups.end(),
                             [&](const auto& g) { return g.first == e.group; });
      if (it == groups.end())
        groups.emplace_back(e.group, 1);
      else
        it->second += 1;
    }
    for (const auto& [group, count] : groups)
      rep.add(group, std::to_string(count) + " entries");
    return finish(rep, json);
  }

  const Selector sel = parse_selector(selector);

  if (sel.name.empty()) {
    // listing of one group, optionally narrowed by arity
    int listed = 0;
    for (const CatalogEntry& e : full_catalog()) {
      if (e.group != sel.group) continue;
      if (sel.arity != 0 && e.arity != sel.arity) continue;
      std::string key = e.group;
      if (e.group == "filippov" || e.group == "bai")
        key += "/n=" + std::to_string(e.arity);
      key += "/" + e.name;
      std::string value =
          "arity " + std::to_string(e.arity) + ", dim " +
          std::to_string(e.dim);
      if (!e.parameters.empty()) {
        value += ", params:";
        for (const ParameterSlot& p : e.parameters) {
          value += " " + p.name;
          if (!p.constraint.empty()) value += " (" + p.constraint + ")";
        }
      }
      rep.add(key, value);
      ++listed;
    }
    if (listed == 0)
      throw UsageError("selector: no entries in group \"" + sel.group + "\"");
    return finish(rep, json);
  }

  const std::optional<CatalogEntry> e =
      find_entry(sel.group, sel.name, sel.arity);
  if (!e)
    throw UsageError("selector: no catalog entry \"" + selector + "\"");

  std::vector<Rational> values;
  std::string params_text;
  if (sel.params.empty()) {
    values = e->samples.front();
    if (!values.empty()) params_text = "defaulted to first recorded sample";
  } else {
    std::size_t width = 0;
    for (const auto& [name, value] : sel.params) {
      const auto slot = std::find_if(
          e->parameters.begin(), e->parameters.end(),
          [&](const ParameterSlot& p) { return p.name == name; });
      if (slot == e->parameters.end())
        throw UsageError("selector: entry " + sel.group + "/" + e->name +
                         " has no parameter \"" + name + "\"");
      width = std::max(
          width, static_cast<std::size_t>(slot - e->parameters.begin()) + 1);
    }
    values.assign(width, Rational(0));
    std::vector<bool> given(width, false);
    for (const auto& [name, value] : sel.params) {
      const std::size_t at = static_cast<std::size_t>(
          std::find_if(e->parameters.begin(), e->parameters.end(),
                       [&](const ParameterSlot& p) { return p.name == name; }) -
          e->parameters.begin());
      if (given[at])
        throw UsageError("selector: parameter \"" + name + "\" given twice");
      given[at] = true;
      values[at] = value;
    }
    for (std::size_t i = 0; i < width; ++i)
      if (!given[i])
        throw UsageError("selector: parameter \"" + e->parameters[i].name +
                         "\" missing");
  }

  NLieAlgebra a(2, 0);
  try {
    a = e->instantiate(values);
  } catch (const std::invalid_argument& ex) {
    throw UsageError(ex.what());
  }

  rep.add("entry", sel.group + "/" + e->name);
  rep.add("arity", std::to_string(e->arity));
  rep.add("dim", std::to_string(e->dim));
  if (params_text.empty() && !values.empty()) {
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i > 0) params_text += ", ";
      params_text += e->parameters[i].name + "=" + values[i].str();
    }
  }
  if (!params_text.empty()) rep.add("parameters", params_text);
  rep.add("case", e->provenance);
  AlgebraFile produced{std::move(a), {}};
  return emit_algebra(produced, output, rep, json);
}

int cmd_reproduce(bool json) {
  const std::vector<ClaimResult> results = run_reproduction_suite();
  int failed = 0;
  for (const ClaimResult& c : results)
    if (!c.pass) ++failed;

  if (json) {
    nlohmann::ordered_json doc;
    doc["command"] = "reproduce";
    doc["claims"] = nlohmann::ordered_json::array();
    for (const ClaimResult& c : results) {
      nlohmann::ordered_json claim;
      claim["number"] = c.number;
      claim["label"] = c.label;
      claim["pass"] = c.pass;
      claim["details"] = c.details;
      doc["claims"].push_back(std::move(claim));
    }
    doc["status"] = failed == 0 ? "pass" : "fail";
    std::cout << doc.dump(2) << "\n";
  } else {
    for (const ClaimResult& c : results) {
      std::cout << (c.pass ? "ok " : "not ok ") << c.number << " - "
                << c.label << "\n";
      for (const std::string& line : c.details)
        std::cout << "  " << line << "\n";
    }
    std::cout << "status: " << (failed == 0 ? "pass" : "FAIL") << "\n";
  }
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"n-ary skew algebra toolkit: exact structure constants, trace-"
               "induced brackets, cohomology, central extensions and a "
               "classification catalog",
               "nlie"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "emit reports as JSON");

  std::string file;
  std::string trace_spec;
  std::string cocycle_spec;
  std::string output;
  std::string selector;
  int degree = 1;
  std::string coeffs = "adjoint";

  CLI::App* c_check = app.add_subcommand(
      "check", "verify the fundamental identity of an algebra document");
  c_check->add_option("file", file, "algebra document")->required();

  CLI::App* c_traces = app.add_subcommand(
      "traces", "print a basis of the functionals vanishing on all brackets");
  c_traces->add_option("file", file, "algebra document")->required();

  CLI::App* c_induce = app.add_subcommand(
      "induce", "raise the arity by one using a trace functional");
  c_induce->add_option("file", file, "algebra document")->required();
  c_induce
      ->add_option("-t,--trace", trace_spec,
                   "covector literal \"1,0,1,0\" or coordinate sum \"x1+x3\" "
                   "(an optional \"label:\" prefix is ignored)")
      ->required();
  c_induce->add_option("-o,--output", output,
                       "write the induced document here and print the "
                       "report instead");

  CLI::App* c_structure = app.add_subcommand(
      "structure", "derived/central series, center, classes and derivations");
  c_structure->add_option("file", file, "algebra document")->required();

  CLI::App* c_cohomology = app.add_subcommand(
      "cohomology", "cocycle, coboundary and cohomology dimensions");
  c_cohomology->add_option("file", file, "algebra document")->required();
  c_cohomology
      ->add_option("-d,--degree", degree, "cochain degree")
      ->check(CLI::Range(1, 2))
      ->capture_default_str();
  c_cohomology
      ->add_option("-c,--coefficients", coeffs, "adjoint or scalar")
      ->check(CLI::IsMember({"adjoint", "scalar"}))
      ->capture_default_str();

  CLI::App* c_extend = app.add_subcommand(
      "extend", "central extension by a scalar 2-cocycle");
  c_extend->add_option("file", file, "algebra document")->required();
  c_extend
      ->add_option("-w,--cocycle", cocycle_spec,
                   "semicolon-separated \"i1,...,in=p/q\" entries with "
                   "1-based increasing indices; empty for the zero form")
      ->required();
  c_extend->add_option("-o,--output", output,
                       "write the extended document here and print the "
                       "report instead");

  CLI::App* c_recognize = app.add_subcommand(
      "recognize",
      "exhibit the algebra as trace-induced, or report the obstruction");
  c_recognize->add_option("file", file, "algebra document")->required();

  CLI::App* c_catalog = app.add_subcommand(
      "catalog", "list built-in classification entries or export one");
  c_catalog->add_option(
      "selector", selector,
      "GROUP[/n=ARITY][/NAME][?param=p/q&...], e.g. \"lie4/M8\", "
      "\"filippov/n=3/3b\", \"bai/n=3/4f?beta=2/1\"; empty lists the groups");
  c_catalog->add_option("-o,--output", output,
                        "write the exported document here and print the "
                        "report instead");

  CLI::App* c_reproduce = app.add_subcommand(
      "reproduce", "re-run the end-to-end verification suite and print the "
                   "comparison table");

  for (CLI::App* sub : app.get_subcommands({}))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c_check->parsed()) return cmd_check(file, json);
    if (c_traces->parsed()) return cmd_traces(file, json);
    if (c_induce->parsed())
      return cmd_induce(file, trace_spec, output, json);
    if (c_structure->parsed()) return cmd_structure(file, json);
    if (c_cohomology->parsed())
      return cmd_cohomology(file, degree, coeffs, json);
    if (c_extend->parsed())
      return cmd_extend(file, cocycle_spec, output, json);
    if (c_recognize->parsed()) return cmd_recognize(file, json);
    if (c_catalog->parsed()) return cmd_catalog(selector, output, json);
    if (c_reproduce->parsed()) return cmd_reproduce(json);
  } catch (const UsageError& e) {
    std::cerr << "nlie: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "nlie: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
