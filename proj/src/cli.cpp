#include "milnor/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <iterator>
#include <numeric>
#include <sstream>
#include <thread>
#include <variant>

namespace milnor::cli {

namespace {

using Structure = SkewIsometricStructure<CycloNumber>;

// ---------------------------------------------------------------- tables

struct Cell {
  std::variant<std::monostate, long, std::string, RootSpec> v;
  Cell() = default;
  Cell(int x) : v(static_cast<long>(x)) {}  // NOLINT(google-explicit-constructor)
  Cell(long x) : v(x) {}                    // NOLINT(google-explicit-constructor)
  Cell(std::string s) : v(std::move(s)) {}  // NOLINT(google-explicit-constructor)
  Cell(const char* s) : v(std::string(s)) {}  // NOLINT(google-explicit-constructor)
  Cell(RootSpec r) : v(r) {}                // NOLINT(google-explicit-constructor)
  Cell(std::optional<int> x) {              // NOLINT(google-explicit-constructor)
    if (x) v = static_cast<long>(*x);
  }
};

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  Json summary = Json::object();
};

std::string decimal(double x) {
  if (std::abs(x) < 5e-13) x = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", x);
  return buf;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

bool is_root_column(const std::string& name) { return name == "xi" || name == "omega"; }

std::string render_csv(const Table& t) {
  std::ostringstream out;
  std::vector<std::string> header;
  // root columns expand to spec, real part and imaginary part
  for (std::size_t c = 0; c < t.columns.size(); ++c) {
    header.push_back(t.columns[c]);
    if (is_root_column(t.columns[c])) {
      header.push_back(t.columns[c] + "_re");
      header.push_back(t.columns[c] + "_im");
    }
  }
  for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
  out << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << ',';
      std::visit(
          [&](const auto& x) {
            using X = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<X, long>) {
              out << x;
            } else if constexpr (std::is_same_v<X, std::string>) {
              out << csv_quote(x);
            } else if constexpr (std::is_same_v<X, RootSpec>) {
              const auto z = x.value().to_complex();
              out << x.text() << ',' << decimal(z.real()) << ',' << decimal(z.imag());
            }
          },
          row[c].v);
    }
    out << '\n';
  }
  return out.str();
}

Json cell_json(const Cell& cell) {
  return std::visit(
      [](const auto& x) -> Json {
        using X = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<X, std::monostate>) {
          return nullptr;
        } else if constexpr (std::is_same_v<X, RootSpec>) {
          return Json{{"spec", x.text()}, {"value", to_json(x.value())}};
        } else {
          return x;
        }
      },
      cell.v);
}

std::string render_json(Command cmd, const std::string& input_kind, const Table& t) {
  Json rows = Json::array();
  for (const auto& row : t.rows) {
    Json r = Json::object();
    for (std::size_t c = 0; c < row.size(); ++c) r[t.columns[c]] = cell_json(row[c]);
    rows.push_back(std::move(r));
  }
  Json doc{{"command", to_string(cmd)}, {"input", input_kind}, {"rows", std::move(rows)}};
  for (const auto& [k, v] : t.summary.items()) doc[k] = v;
  return doc.dump(2) + "\n";
}

// ---------------------------------------------------------------- rows

/// Evaluates f(0..n-1) on worker threads; results keep index order and the
/// lowest-index exception is rethrown.
template <class F>
auto parallel_map(std::size_t n, F&& f) -> std::vector<decltype(f(std::size_t{0}))> {
  using R = decltype(f(std::size_t{0}));
  std::vector<std::optional<R>> results(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        results[i] = f(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::min<std::size_t>(n, std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::jthread> pool;
  for (std::size_t k = 1; k < threads; ++k) pool.emplace_back(worker);
  worker();
  pool.clear();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<R> out;
  out.reserve(n);
  for (auto& r : results) out.push_back(std::move(*r));
  return out;
}

// ---------------------------------------------------------------- input

enum class InputKind { Structure, Fibered, Seifert, LinkingForm };

std::string to_string(InputKind k) {
  switch (k) {
    case InputKind::Structure: return "structure";
    case InputKind::Fibered: return "fibered";
    case InputKind::Seifert: return "seifert";
    case InputKind::LinkingForm: return "linking-form";
  }
  return "?";
}

struct Input {
  InputKind kind;
  Json json;
};

Input load_input(const JobSpec& job) {
  std::string text;
  if (job.input_text) {
    text = *job.input_text;
  } else if (job.input_path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(job.input_path, std::ios::binary);
    if (!in) throw ParseError("cannot read input file '" + job.input_path + "'");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  Json j = parse_json(text);
  if (!j.is_object()) throw ParseError("input: expected a JSON object");
  if (j.contains("mu")) return {InputKind::Structure, std::move(j)};
  if (j.contains("lambda")) return {InputKind::Fibered, std::move(j)};
  if (j.contains("V")) return {InputKind::Seifert, std::move(j)};
  if (j.contains("presentation") || j.contains("elementary")) return {InputKind::LinkingForm, std::move(j)};
  throw ParseError("input: expected a structure (mu, t), fibered data (lambda, phi), Seifert input (V) or "
                   "linking form (presentation | elementary)");
}

Structure structure_of(const Input& in) {
  switch (in.kind) {
    case InputKind::Structure: return structure_from_json(in.json);
    case InputKind::Fibered: return milnor_structure(fibered_from_json(in.json));
    case InputKind::Seifert: {
      const SeifertInput s = seifert_from_json(in.json);
      return milnor_structure(from_seifert(s.v, s.omega.value()));
    }
    case InputKind::LinkingForm: return chi_pushforward(linkform_from_json(in.json));
  }
  throw ParseError("unreachable input kind");
}

std::vector<RootSpec> specs_of(const std::vector<CycloNumber>& roots) {
  std::vector<RootSpec> out;
  for (const auto& z : roots)
    if (auto r = root_spec_of(z)) out.push_back(*r);
  return out;
}

std::vector<RootSpec> structure_points(const Structure& s) {
  std::vector<CycloNumber> roots;
  for (const auto& part : primary_decomposition(s).parts) roots.push_back(part.xi);
  return specs_of(roots);
}

std::vector<RootSpec> linkform_points(const LinkingForm& l) {
  std::vector<CycloNumber> roots;
  for (const auto& [p, mult] : factor_basic(determinant(l.relations), l.flavor).factors)
    if (!p.exceptional) roots.push_back(p.xi);
  return specs_of(roots);
}

/// Explicit list, then grid, then the command's natural default.
template <class Default>
std::vector<RootSpec> points_for(const JobSpec& job, Default&& fallback) {
  if (!job.xi_list.empty()) return job.xi_list;
  if (job.grid) return grid_points(*job.grid);
  return fallback();
}

std::vector<CycloNumber> values_of(const std::vector<RootSpec>& pts) {
  std::vector<CycloNumber> out;
  for (const auto& p : pts) out.push_back(p.value());
  return out;
}

// ---------------------------------------------------------------- commands

Table signature_table(const JobSpec& job, const Input& in) {
  const Structure s = structure_of(in);
  const auto pts = points_for(job, [&] { return structure_points(s); });
  Table t;
  t.columns = {"xi", "milnor_signature", "total_signature"};
  std::vector<int> sigs;
  int total = 0;
  if (job.float_tol) {
    const double tol = *job.float_tol;
    const auto sf = to_float(s, tol);
    total = total_signature(sf);
    sigs = parallel_map(pts.size(), [&](std::size_t i) {
      return milnor_signature(sf, ApproxComplex(pts[i].value(), tol));
    });
    t.summary["backend"] = "float";
    t.summary["tolerance"] = tol;
  } else {
    total = total_signature(s);
    const LaurentPoly char_t = characteristic_laurent(s.t);
    sigs = parallel_map(pts.size(), [&](std::size_t i) { return milnor_signature(s, pts[i].value(), char_t); });
    t.summary["backend"] = "exact";
  }
  t.summary["total_signature"] = total;
  for (std::size_t i = 0; i < pts.size(); ++i) t.rows.push_back({pts[i], sigs[i], total});
  return t;
}

LinkingForm linkform_of(const Input& in, const char* command) {
  if (in.kind == InputKind::LinkingForm) return linkform_from_json(in.json);
  if (in.kind == InputKind::Seifert) return blanchfield_from_seifert(seifert_from_json(in.json).v, {false});
  throw ParseError(std::string(command) + " needs a linking form or Seifert input, got " + to_string(in.kind));
}

Table jumps_table(const JobSpec& job, const Input& in, bool& failed) {
  const LinkingForm l = linkform_of(in, "jumps");
  const auto pts = points_for(job, [&] { return linkform_points(l); });
  const auto reports = signature_jumps(l, values_of(pts), {job.check_both_routes});
  Table t;
  t.columns = {"xi", "jump", "route"};
  if (job.check_both_routes) t.columns.insert(t.columns.end(), {"route_a", "route_b", "agree"});
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const JumpReport& r = reports[i];
    std::vector<Cell> row{pts[i], r.value, to_string(r.route)};
    if (job.check_both_routes) {
      row.insert(row.end(), {Cell(r.devissage_value), Cell(r.pushforward_value), r.routes_agree() ? "OK" : "FAIL"});
      if (!r.routes_agree()) failed = true;
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table lt_profile_table(const JobSpec& job, const Input& in) {
  if (in.kind != InputKind::Seifert) throw ParseError("lt-profile needs Seifert input, got " + to_string(in.kind));
  const IntMatrix v = seifert_from_json(in.json).v;
  const LaurentPoly delta = alexander_polynomial(v);
  const auto pts = points_for(job, [] { return grid_points(12); });
  struct Row {
    std::optional<int> lt, predicted;
    int total = 0;
    bool caveat = false;
  };
  const auto rows = parallel_map(pts.size(), [&](std::size_t i) {
    const CycloNumber w = pts[i].value();
    const CycloNumber one(1);
    Row r;
    r.total = total_signature(milnor_structure(from_seifert(v, w)));
    if (!(w == one)) r.lt = levine_tristram(v, w);
    if (!(w == -one) && r.lt) r.predicted = levine_tristram(v, -w) - *r.lt;
    r.caveat = delta.evaluate(w).is_zero() || delta.evaluate(-w).is_zero();
    return r;
  });
  Table t;
  t.columns = {"omega", "levine_tristram", "total_signature", "predicted", "matches", "caveat"};
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Row& r = rows[i];
    Cell matches;
    if (r.predicted) matches = Cell(*r.predicted == r.total ? 1 : 0);
    t.rows.push_back({pts[i], r.lt, r.total, r.predicted, matches, r.caveat ? 1 : 0});
  }
  return t;
}

Table crosscheck_table(const JobSpec& job, const Input& in, bool& failed) {
  Table t;
  if (in.kind == InputKind::Seifert) {
    const IntMatrix v = seifert_from_json(in.json).v;
    const LinkingForm bl = blanchfield_from_seifert(v, {false});
    const auto pts = points_for(job, [&] { return specs_of(alexander_circle_roots(v)); });
    const auto xs = values_of(pts);
    const BlanchfieldComparison cmp = compare_blanchfield(v, xs);
    const auto reports = signature_jumps(bl, xs, {true});
    t.columns = {"xi", "blanchfield_signature", "fibered_signature", "jump", "constant", "agree"};
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const int a = cmp.blanchfield[i], b = cmp.fibered[i];
      const int c = pushforward_constant(xs[i], bl.flavor);
      const bool main_ok = reports[i].routes_agree() && a == c * reports[i].value;
      const bool sign_ok = (a == 0 && b == 0) || (cmp.sign && a == *cmp.sign * b);
      const bool ok = main_ok && sign_ok && cmp.consistent;
      if (!ok) failed = true;
      t.rows.push_back({pts[i], a, b, reports[i].value, c, ok ? "OK" : "FAIL"});
    }
    t.summary["global_sign"] = cmp.sign ? Json(*cmp.sign) : Json(nullptr);
    t.summary["measured_sign"] = kMeasuredBlanchfieldSign;
  } else {
    const LinkingForm l = linkform_of(in, "crosscheck");
    const Structure s = chi_pushforward(l);
    const auto pts = points_for(job, [&] { return linkform_points(l); });
    const auto xs = values_of(pts);
    const auto reports = signature_jumps(l, xs, {true});
    const LaurentPoly char_t = characteristic_laurent(s.t);
    const auto sigmas = parallel_map(xs.size(), [&](std::size_t i) { return milnor_signature(s, xs[i], char_t); });
    t.columns = {"xi", "jump", "route", "route_a", "milnor_signature", "constant", "agree"};
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const JumpReport& r = reports[i];
      const int sigma = sigmas[i];
      const int c = pushforward_constant(xs[i], l.flavor);
      const bool ok = r.routes_agree() && sigma == c * r.value;
      if (!ok) failed = true;
      t.rows.push_back({pts[i], r.value, to_string(r.route), Cell(r.devissage_value), sigma, c, ok ? "OK" : "FAIL"});
    }
  }
  t.summary["agreement"] = failed ? "FAIL" : "OK";
  return t;
}

std::string elementary_output(const JobSpec& job) {
  const RootSpec xi = job.xi_list.front();
  const LinkingForm l = elementary_linking(job.n, job.eps, xi.value(), job.flavor);
  const Structure s = chi_pushforward(l);
  const int jump = signature_jump(l, xi.value());
  const int sigma = milnor_signature(s, xi.value());
  if (job.format == OutputFormat::Json) {
    Json doc{{"command", "elementary"},
             {"n", job.n},
             {"eps", job.eps},
             {"xi", Json{{"spec", xi.text()}, {"value", to_json(xi.value())}}},
             {"flavor", milnor::to_string(job.flavor)},
             {"linking_form", to_json(l)},
             {"structure", to_json(s)},
             {"jump", jump},
             {"milnor_signature", sigma}};
    return doc.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "object,row,col,re,im,exact\n";
  auto scalar_rows = [&](const char* name, const Matrix<CycloNumber>& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) {
        const auto z = m(i, j).to_complex();
        out << name << ',' << i << ',' << j << ',' << decimal(z.real()) << ',' << decimal(z.imag()) << ','
            << csv_quote(milnor::to_string(m(i, j))) << '\n';
      }
  };
  auto text_rows = [&](const char* name, const auto& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        out << name << ',' << i << ',' << j << ",,," << csv_quote(milnor::to_string(m(i, j))) << '\n';
  };
  scalar_rows("structure.mu", s.mu);
  scalar_rows("structure.t", s.t);
  text_rows("linking_form.presentation", l.relations);
  text_rows("linking_form.gram", l.gram);
  out << "jump,,,,," << jump << '\n';
  out << "milnor_signature,,,,," << sigma << '\n';
  return out.str();
}

}  // namespace

Command parse_command(std::string_view name) {
  if (name == "signature") return Command::Signature;
  if (name == "jumps") return Command::Jumps;
  if (name == "lt-profile") return Command::LtProfile;
  if (name == "crosscheck") return Command::Crosscheck;
  if (name == "elementary") return Command::Elementary;
  throw ParseError("unknown command '" + std::string(name) + "'");
}

std::string to_string(Command c) {
  switch (c) {
    case Command::Signature: return "signature";
    case Command::Jumps: return "jumps";
    case Command::LtProfile: return "lt-profile";
    case Command::Crosscheck: return "crosscheck";
    case Command::Elementary: return "elementary";
  }
  return "?";
}

OutputFormat parse_format(std::string_view name) {
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  throw ParseError("unknown format '" + std::string(name) + "' (expected csv|json)");
}

void JobSpec::validate() const {
  const int sources = (input_path.empty() ? 0 : 1) + (input_text ? 1 : 0);
  if (command == Command::Elementary) {
    if (sources != 0) throw ParseError("elementary takes no input");
    if (xi_list.size() != 1 || grid) throw ParseError("elementary needs exactly one --xi");
    if (n < 1 || n > 64) throw ParseError("elementary: n must lie in 1..64");
    if (eps != 1 && eps != -1) throw ParseError("elementary: eps must be +1 or -1");
  } else if (sources != 1) {
    throw ParseError("exactly one input source is required");
  }
  if (grid && *grid < 1) throw ParseError("grid resolution must be >= 1");
  if (grid && *grid > 360) throw ParseError("grid resolution above 360 is not supported");
  if (grid && !xi_list.empty()) throw ParseError("--xi and --grid are mutually exclusive");
  if (float_tol && command != Command::Signature) throw ParseError("--float-tol applies to signature only");
  if (float_tol && !(*float_tol > 0.0 && *float_tol < 1.0)) throw ParseError("--float-tol must lie in (0, 1)");
  if (check_both_routes && command != Command::Jumps && command != Command::Crosscheck) {
    throw ParseError("--check-both-routes applies to jumps and crosscheck");
  }
}

std::vector<RootSpec> grid_points(int bound) {
  std::vector<RootSpec> out;
  for (int n = 3; n <= bound; ++n)
    for (long k = 1; k < n; ++k)
      if (std::gcd(k, static_cast<long>(n)) == 1) out.push_back(RootSpec{n, k});
  return out;
}

std::optional<RootSpec> root_spec_of(const CycloNumber& z) {
  const int n = z.order();
  const int m = n % 2 ? 2 * n : n;
  for (long k = 0; k < m; ++k) {
    if (!(cyclo(m, k) == z)) continue;
    const long g = std::gcd(k, static_cast<long>(m));
    return RootSpec{static_cast<int>(m / g), k / g};
  }
  return std::nullopt;
}

RunResult run(const JobSpec& job) {
  RunResult res;
  try {
    job.validate();
    if (job.command == Command::Elementary) {
      res.output = elementary_output(job);
      return res;
    }
    const Input in = load_input(job);
    bool failed = false;
    Table t;
    switch (job.command) {
      case Command::Signature: t = signature_table(job, in); break;
      case Command::Jumps: t = jumps_table(job, in, failed); break;
      case Command::LtProfile: t = lt_profile_table(job, in); break;
      case Command::Crosscheck: t = crosscheck_table(job, in, failed); break;
      case Command::Elementary: break;
    }
    res.output = job.format == OutputFormat::Csv ? render_csv(t) : render_json(job.command, to_string(in.kind), t);
    if (failed) {
      res.exit_code = kExitCrosscheck;
      res.error = "cross-check failed";
    }
  } catch (const ConsistencyError& e) {
    res = RunResult{kExitCrosscheck, "", std::string("cross-check failed: ") + e.what()};
  } catch (const ParseError& e) {
    res = RunResult{kExitInvalid, "", std::string("error: ") + e.what()};
  } catch (const DomainError& e) {
    res = RunResult{kExitInvalid, "", std::string("error: ") + e.what()};
  } catch (const PreconditionError& e) {
    res = RunResult{kExitInvalid, "", std::string("error: ") + e.what()};
  } catch (const std::invalid_argument& e) {
    res = RunResult{kExitInvalid, "", std::string("error: ") + e.what()};
  } catch (const std::exception& e) {
    res = RunResult{kExitInternal, "", std::string("internal error: ") + e.what()};
  }
  return res;
}

}  // namespace milnor::cli
