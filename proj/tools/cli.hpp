#pragma once

// Command-line front end. run() takes the arguments after the program name and writes to the
// given streams, so tests can drive it in-process.
//
// Exit codes: 0 success, 1 internal error, 2 hypothesis violated, 3 budget exceeded,
// 4 invalid input.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wprm/wprm.hpp"

namespace wprm::cli {

using json = nlohmann::ordered_json;

enum ExitCode : int { ok = 0, internal = 1, hypothesis = 2, budget = 3, invalid_input = 4 };

inline int exit_code_for(Errc e) {
  switch (e) {
    case Errc::HypothesisViolated: return hypothesis;
    case Errc::BudgetExceeded: return budget;
    case Errc::NotAPrimePower:
    case Errc::EmptyDegree:
    case Errc::ParseError:
    case Errc::InvalidArgument:
    case Errc::DegreeNotDivisible:
    case Errc::BadAlphas: return invalid_input;
    default: return internal;
  }
}

/// A rectangular report rendered as an aligned table, CSV or JSON.
struct Report {
  std::string command;
  json params = json::object();
  std::vector<std::string> columns;
  std::vector<std::vector<json>> rows;
  std::vector<std::string> notes;

  void add(std::vector<json> row) { rows.push_back(std::move(row)); }
};

inline std::string cell_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string r = "\"";
  for (char c : s) r += c == '"' ? std::string("\"\"") : std::string(1, c);
  return r + "\"";
}

inline std::string render(const Report& r, const std::string& format) {
  std::ostringstream os;
  if (format == "json") {
    json j;
    j["command"] = r.command;
    j["params"] = r.params;
    j["columns"] = r.columns;
    auto rows = json::array();
    for (const auto& row : r.rows) {
      json o = json::object();
      for (std::size_t c = 0; c < r.columns.size(); ++c) o[r.columns[c]] = row[c];
      rows.push_back(std::move(o));
    }
    j["rows"] = std::move(rows);
    j["notes"] = r.notes;
    os << j.dump(2) << '\n';
  } else if (format == "csv") {
    for (std::size_t c = 0; c < r.columns.size(); ++c) os << (c ? "," : "") << csv_field(r.columns[c]);
    os << '\n';
    for (const auto& row : r.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << csv_field(cell_text(row[c]));
      os << '\n';
    }
  } else {
    std::vector<std::size_t> width(r.columns.size());
    for (std::size_t c = 0; c < r.columns.size(); ++c) width[c] = r.columns[c].size();
    for (const auto& row : r.rows)
      for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], cell_text(row[c]).size());
    const auto line = [&](const std::vector<std::string>& cells) {
      std::string s;
      for (std::size_t c = 0; c < cells.size(); ++c) {
        s += cells[c];
        if (c + 1 < cells.size()) s += std::string(width[c] - cells[c].size() + 2, ' ');
      }
      os << s << '\n';
    };
    line(r.columns);
    for (const auto& row : r.rows) {
      std::vector<std::string> cells;
      for (const auto& v : row) cells.push_back(cell_text(v));
      line(cells);
    }
    for (const auto& n : r.notes) os << "# " << n << '\n';
  }
  return os.str();
}

struct RunConfig {
  std::uint32_t q = 0;
  std::vector<int> w;
  long long d = 0;
  std::string d_range;
  std::string mode = "formula";
  std::uint64_t budget = default_class_budget;
  std::uint64_t seed = 0;
  std::uint64_t iterations = 200;
  unsigned threads = 1;
  std::string format = "table";
  std::string out;
  bool generator = false;
};

inline std::pair<long long, long long> parse_range(const std::string& s) {
  std::string a;
  std::string b;
  if (const auto p = s.find(".."); p != std::string::npos) {
    a = s.substr(0, p);
    b = s.substr(p + 2);
  } else if (const auto p2 = s.find('-', 1); p2 != std::string::npos) {
    a = s.substr(0, p2);
    b = s.substr(p2 + 1);
  } else {
    a = b = s;
  }
  try {
    std::size_t ia = 0;
    std::size_t ib = 0;
    const long long lo = std::stoll(a, &ia);
    const long long hi = std::stoll(b, &ib);
    require(ia == a.size() && ib == b.size() && lo <= hi, Errc::ParseError, "bad degree range '" + s + "'");
    return {lo, hi};
  } catch (const std::logic_error&) {
    fail(Errc::ParseError, "bad degree range '" + s + "'");
  }
}

inline json point_json(const ProjectivePoint& P) {
  auto a = json::array();
  for (Elem e : P.coords) a.push_back(e.value);
  return a;
}

inline std::string point_text(const Field& F, const ProjectivePoint& P) {
  std::string s = "(";
  for (std::size_t i = 0; i < P.coords.size(); ++i) s += (i ? ":" : "") + format_coefficient(F, P.coords[i]);
  return s + ")";
}

inline json base_params(const RunConfig& c) {
  json p;
  p["q"] = c.q;
  p["w"] = c.w;
  return p;
}

inline Report cmd_points(const RunConfig& c) {
  const Field F(c.q);
  const Weights w(c.w);
  const PointSet pts = enumerate_points(F, w);
  Report r{"points", base_params(c), {"index", "point", "coords"}, {}, {}};
  for (std::size_t i = 0; i < pts.size(); ++i) r.add({i, point_text(F, pts[i]), point_json(pts[i])});
  r.notes.push_back(std::to_string(pts.size()) + " points, p_m = " + std::to_string(p_j(c.q, w.m())));
  return r;
}

inline json bound_row_source(const BoundReport& b) { return b.source; }

inline Report cmd_eq(const RunConfig& c) {
  const Weights w(c.w);
  json params = base_params(c);
  params["d"] = c.d;
  params["mode"] = c.mode;
  Report r{"eq", params, {"quantity", "value", "kind", "source"}, {}, {}};
  if (c.mode == "formula") {
    const BoundReport b = eq_formula(c.q, w, c.d);
    r.add({"e_q", b.value, to_string(b.kind), b.source});
    for (const auto& h : b.hypotheses) r.notes.push_back("hypothesis: " + h.name);
  } else if (c.mode == "bruteforce") {
    const Field F(c.q);
    const PointSet pts = enumerate_points(F, w);
    const LinearCode code = wprm_code(pts, c.d);
    const std::uint64_t e = eq_bruteforce(pts, c.d, c.budget, c.threads);
    r.add({"e_q", e, "exact", code.injective ? "exhaustive" : "non_injective"});
  } else if (c.mode == "bounds") {
    require(semigroup_contains(c.d, w), Errc::EmptyDegree,
            "no monomial of degree " + std::to_string(c.d) + " for weights " + w.to_string());
    const BoundReport lo = lower_bound_general(c.q, w, c.d);
    r.add({"lower", lo.value, "lower", lo.source});
    try {
      const BoundReport up = upper_bound_coprime(c.q, w, c.d);
      r.add({"upper", up.value, "upper", up.source});
    } catch (const Error& e) {
      if (e.code() != Errc::HypothesisViolated) throw;
      r.add({"upper", p_j(c.q, w.m()), "upper", "point_count"});
      r.notes.push_back(e.what());
    }
  } else {
    fail(Errc::InvalidArgument, "unknown mode '" + c.mode + "'");
  }
  return r;
}

inline Report cmd_table1(const RunConfig& c) {
  const Weights w{2, 3, 5};
  const Field F(c.q);
  const PointSet pts = enumerate_points(F, w);
  const std::uint64_t pm = pts.size();
  long long lo = 5;
  long long hi = 6 * static_cast<long long>(c.q) - 2;
  if (!c.d_range.empty()) std::tie(lo, hi) = parse_range(c.d_range);
  json params;
  params["q"] = c.q;
  params["w"] = w.values();
  params["d_range"] = std::to_string(lo) + ".." + std::to_string(hi);
  params["budget"] = c.budget;
  params["seed"] = c.seed;
  params["iterations"] = c.iterations;
  Report r{"table1", params,
           {"d", "lower_bound", "exact_or_range_low", "exact_or_range_high", "upper_bound", "status"}, {}, {}};
  for (long long d = lo; d <= hi; ++d) {
    if (d < 1 || !semigroup_contains(d, w)) continue;
    const std::uint64_t lower = lower_bound_general(c.q, w, d).value;
    json upper = nullptr;
    std::uint64_t high = pm;
    try {
      const auto u = upper_bound_coprime(c.q, w, d).value;
      upper = u;
      high = u;
    } catch (const Error& e) {
      if (e.code() != Errc::HypothesisViolated) throw;
    }
    const LinearCode code = wprm_code(pts, d);
    if (!code.injective) {
      // Some nonzero form vanishes at every point, so e_q = p_m by definition.
      r.add({d, lower, pm, pm, upper, "non_injective"});
      r.notes.push_back("d = " + std::to_string(d) + ": evaluation is not injective, e_q = p_m");
      continue;
    }
    if (projective_class_count(c.q, code.k) <= c.budget) {
      const std::uint64_t e = pm - min_distance_exact(code, c.budget, c.threads);
      r.add({d, lower, e, e, upper, "exact"});
    } else {
      const auto found = min_weight_random_search(code, c.iterations, c.seed + static_cast<std::uint64_t>(d));
      r.add({d, lower, pm - found.weight, high, upper, "range"});
    }
  }
  return r;
}

inline Report cmd_footprint(const RunConfig& c) {
  const Field F(c.q);
  const Weights w(c.w);
  const PointSet pts = enumerate_points(F, w);
  const FootprintContext ctx(pts, c.d);
  const StandardBasis sb = standard_monomials(c.d, pts);
  json params = base_params(c);
  params["d"] = c.d;
  params["d_tilde"] = ctx.d_tilde();
  Report r{"footprint", params, {"monomial", "slice", "fb", "zero_bound"}, {}, {}};
  for (const auto& mono : sb.monomials) {
    const auto fb = ctx.fb(mono);
    const auto slice = mono.first_support();
    r.add({format_monomial(mono), slice < mono.size() ? json(slice) : json(nullptr), fb, ctx.p_m() - fb});
  }
  r.notes.push_back("d~ = " + std::to_string(ctx.d_tilde()) + ", checked again at " + std::to_string(ctx.d_tilde_next()));
  return r;
}

inline Report cmd_code(const RunConfig& c) {
  const Field F(c.q);
  const Weights w(c.w);
  const PointSet pts = enumerate_points(F, w);
  const LinearCode code = wprm_code(pts, c.d);
  json params = base_params(c);
  params["d"] = c.d;
  Report r{"code", params, {"parameter", "value"}, {}, {}};
  r.add({"n", code.n});
  r.add({"k", code.k});
  r.add({"injective", code.injective});
  r.add({"denumerant", denumerant(c.d, w)});
  if (projective_class_count(c.q, code.k) <= c.budget) {
    r.add({"d_min", min_distance_exact(code, c.budget, c.threads)});
  } else {
    const auto found = min_weight_random_search(code, c.iterations, c.seed);
    r.add({"d_min_upper", found.weight});
    r.notes.push_back("exhaustive search over budget; d_min_upper comes from the randomized search");
  }
  std::string basis;
  for (const auto& m : code.basis_monomials) basis += (basis.empty() ? "" : " ") + format_monomial(m);
  r.add({"basis", basis});
  if (c.generator) {
    const auto j = generator_to_json(code);
    r.add({"generator", j["rows"]});
  }
  return r;
}

inline Report cmd_witness(const RunConfig& c) {
  const Field F(c.q);
  const Weights w(c.w);
  const PointSet pts = enumerate_points(F, w);
  json params = base_params(c);
  params["d"] = c.d;
  std::optional<ExtremalWitness> wit;
  if (w.m() == 1) {
    wit = extremal_m1(pts, c.d);
  } else {
    require(w[0] == 1, Errc::HypothesisViolated,
            "witnesses are built for w_0 = 1 or m = 1, got " + w.to_string());
    wit = extremal_w0_one(pts, c.d);
  }
  Report r{"witness", params, {"polynomial", "zeros", "attains", "verified"}, {}, {}};
  r.add({format_poly(wit->poly), wit->claimed_zeros, wit->attains, verify_witness(*wit, pts)});
  return r;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zeros of weighted homogeneous forms over finite fields and weighted projective Reed-Muller codes",
               "wprm"};
  app.require_subcommand(1);
  RunConfig c;
  const auto common = [&](CLI::App* s, bool needs_w, bool needs_d) {
    s->add_option("--q", c.q, "Field size (a prime power)")->required();
    if (needs_w) s->add_option("--w", c.w, "Weights, comma separated")->delimiter(',')->required();
    if (needs_d) s->add_option("--d", c.d, "Weighted degree")->required();
    s->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"table", "csv", "json"}));
    s->add_option("--out", c.out, "Write output to this file");
  };
  const auto search = [&](CLI::App* s) {
    s->add_option("--budget", c.budget, "Largest number of projective classes to enumerate");
    s->add_option("--seed", c.seed, "Seed for randomized searches");
    s->add_option("--iterations", c.iterations, "Iterations of the randomized search");
    s->add_option("--threads", c.threads, "Worker threads for exhaustive search");
  };
  auto* points = app.add_subcommand("points", "List canonical representatives of P(w)(F_q)");
  common(points, true, false);
  auto* eq = app.add_subcommand("eq", "Maximum number of zeros e_q(d; w)");
  common(eq, true, true);
  search(eq);
  eq->add_option("--mode", c.mode, "formula, bruteforce or bounds")
      ->check(CLI::IsMember({"formula", "bruteforce", "bounds"}));
  auto* table1 = app.add_subcommand("table1", "e_q(d; 2,3,5) per degree with bounds");
  common(table1, false, false);
  search(table1);
  table1->add_option("--d-range", c.d_range, "Degree range lo..hi (default 5..6q-2)");
  auto* footprint = app.add_subcommand("footprint", "Footprint bounds of the standard monomials of degree d");
  common(footprint, true, true);
  auto* code = app.add_subcommand("code", "Parameters of the weighted projective Reed-Muller code");
  common(code, true, true);
  search(code);
  code->add_flag("--generator", c.generator, "Include the generator matrix");
  auto* witness = app.add_subcommand("witness", "An explicit form attaining e_q, with its zero count verified");
  common(witness, true, true);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return invalid_input;
  }

  try {
    Report r;
    if (*points) r = cmd_points(c);
    else if (*eq) r = cmd_eq(c);
    else if (*table1) r = cmd_table1(c);
    else if (*footprint) r = cmd_footprint(c);
    else if (*code) r = cmd_code(c);
    else r = cmd_witness(c);
    const std::string text = render(r, c.format);
    if (c.out.empty()) {
      out << text;
    } else {
      std::ofstream f(c.out, std::ios::binary);
      require(static_cast<bool>(f), Errc::InvalidArgument, "cannot open '" + c.out + "' for writing");
      f << text;
    }
    return ok;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return internal;
  }
}

}  // namespace wprm::cli
