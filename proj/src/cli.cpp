#include "kacres/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "kacres/bruhat.hpp"
#include "kacres/characters.hpp"
#include "kacres/cohomology.hpp"
#include "kacres/errors.hpp"
#include "kacres/realization.hpp"
#include "kacres/verma_gl12.hpp"
#include "kacres/weyl.hpp"

namespace kacres {

namespace {

using ordered_json = nlohmann::ordered_json;

int parse_rank(const std::string& text) {
  if (text == "inf") return kInfiniteN;
  try {
    size_t used = 0;
    int v = std::stoi(text, &used);
    if (used != text.size() || v < 1) throw std::invalid_argument("");
    return v;
  } catch (...) {
    throw std::invalid_argument("n must be a positive integer or \"inf\"");
  }
}

ordered_json rank_json(int n) {
  return n == kInfiniteN ? ordered_json("inf") : ordered_json(n);
}

std::vector<std::string> split_semicolons(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ';') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

ordered_json laurent_json(const SparseLaurent& p) {
  ordered_json arr = ordered_json::array();
  for (const auto& [exps, coeff] : p.terms) {
    ordered_json t;
    t["exponents"] = exps;
    t["coeff"] = std::to_string(coeff);
    arr.push_back(std::move(t));
  }
  return arr;
}

std::string cell_text(const ordered_json& v) {
  return v.is_string() ? v.get<std::string>() : v.dump();
}

// Aligned-table rendering of the same report object: arrays of records
// become aligned columns, everything else one line per key.
void render_table(const ordered_json& rep, std::ostream& os) {
  for (const auto& [key, value] : rep.items()) {
    if (value.is_array() && !value.empty() && value.front().is_object()) {
      os << key << ":\n";
      std::vector<std::string> cols;
      for (const auto& row : value)
        for (const auto& [k2, v2] : row.items()) {
          (void)v2;
          if (std::find(cols.begin(), cols.end(), k2) == cols.end()) cols.push_back(k2);
        }
      std::vector<std::vector<std::string>> grid;
      grid.push_back(cols);
      for (const auto& row : value) {
        std::vector<std::string> line;
        for (const std::string& c : cols) line.push_back(row.contains(c) ? cell_text(row[c]) : "");
        grid.push_back(std::move(line));
      }
      std::vector<size_t> width(cols.size(), 0);
      for (const auto& line : grid)
        for (size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
      for (const auto& line : grid) {
        os << " ";
        for (size_t c = 0; c < line.size(); ++c) {
          os << " " << line[c];
          if (c + 1 < line.size()) os << std::string(width[c] - line[c].size(), ' ');
        }
        os << "\n";
      }
    } else if (value.is_object()) {
      os << key << ":";
      for (const auto& [k2, v2] : value.items()) os << " " << k2 << "=" << cell_text(v2);
      os << "\n";
    } else {
      os << key << ": " << cell_text(value) << "\n";
    }
  }
}

struct Request {
  int m = 1;
  std::string n_text = "inf";
  std::string lambda_text;
  int kmax = 0;
  int depth = 0;
  std::string weights_text;
  std::string format = "json";
  std::string out_file;
};

int do_resolve(const Request& rq, ordered_json& rep) {
  int n = parse_rank(rq.n_text);
  Partition p = parse_partition(rq.lambda_text);
  rep["params"] = {{"m", rq.m}, {"n", rank_json(n)}, {"lambda", rq.lambda_text}, {"kmax", rq.kmax}};
  SuperWeight lam = split_hook(p, rq.m, n);
  CosetLayers layers = minimal_coset_layers(lam, rq.kmax);
  ordered_json results = ordered_json::array();
  for (const auto& [k, ws] : layers) {
    for (const SuperWeight& eta : ws) {
      SuperWeight nat = natural(eta);
      bool truncated = n != kInfiniteN && !survives_truncation(eta, n);
      ordered_json rec;
      rec["k"] = k;
      rec["eta"] = format_weight(eta);
      rec["eta_natural"] = format_weight(nat);
      rec["casimir_s"] = casimir_super(nat);
      rec["z_degree"] = format_half(z_degree2(nat));
      rec["dim_l0"] =
          truncated || n == kInfiniteN ? ordered_json(nullptr) : ordered_json(g0_irrep_dim(with_n(nat, n), n));
      rec["truncated"] = truncated;
      results.push_back(std::move(rec));
    }
  }
  rep["results"] = std::move(results);
  return 0;
}

int do_verify_euler(const Request& rq, ordered_json& rep) {
  int n = parse_rank(rq.n_text);
  Partition p = parse_partition(rq.lambda_text);
  rep["params"] = {{"m", rq.m}, {"n", rank_json(n)}, {"lambda", rq.lambda_text}, {"depth", rq.depth}};
  EulerReport er = euler_characteristic_check(p, rq.m, n, rq.depth);
  rep["results"] = {{"tvars", er.tvars},
                    {"z2_cutoff", format_half(er.z2_cutoff)},
                    {"layer_terms", er.layer_terms},
                    {"truncated_terms", er.truncated_terms}};
  rep["pass"] = er.pass;
  rep["residual"] = laurent_json(er.residual);
  return er.pass ? 0 : 3;
}

int do_verify_incomparable(const Request& rq, ordered_json& rep) {
  Partition p = parse_partition(rq.lambda_text);
  rep["params"] = {{"m", rq.m}, {"lambda", rq.lambda_text}, {"kmax", rq.kmax}};
  SuperWeight lam = split_hook(p, rq.m, kInfiniteN);
  CosetLayers layers = minimal_coset_layers(lam, rq.kmax);
  ordered_json results = ordered_json::array();
  bool pass = true;
  for (const auto& [k, ws] : layers) {
    ordered_json rec;
    rec["k"] = k;
    ordered_json names = ordered_json::array();
    for (const SuperWeight& eta : ws) names.push_back(format_weight(natural(eta)));
    rec["weights_natural"] = std::move(names);
    std::optional<std::pair<int, int>> hit = first_comparable_pair(ws, true);
    rec["incomparable"] = !hit.has_value();
    if (hit) {
      pass = false;
      rec["witness"] = {{"first", format_weight(natural(ws[hit->first]))},
                        {"second", format_weight(natural(ws[hit->second]))}};
    }
    results.push_back(std::move(rec));
  }
  rep["results"] = std::move(results);
  rep["pass"] = pass;
  return pass ? 0 : 3;
}

int do_hs(const Request& rq, ordered_json& rep) {
  int n = parse_rank(rq.n_text);
  Partition p = parse_partition(rq.lambda_text);
  rep["params"] = {{"m", rq.m}, {"n", rank_json(n)}, {"lambda", rq.lambda_text}};
  int tvars = n == kInfiniteN ? std::max(1, static_cast<int>(partition_size(p))) : n;
  SparseLaurent hs = hook_schur_polynomial(p, rq.m, tvars);
  rep["results"] = {{"tvars", tvars},
                    {"terms", static_cast<long long>(hs.terms.size())},
                    {"dim_at_ones", eval_at_ones(hs)},
                    {"character", laurent_json(hs)}};
  return 0;
}

int do_casimir(const Request& rq, ordered_json& rep) {
  std::vector<std::string> parts = split_semicolons(rq.weights_text);
  rep["params"] = {{"weights", parts}};
  ordered_json results = ordered_json::array();
  for (const std::string& s : parts) {
    SuperWeight w = parse_weight(s);
    ordered_json rec;
    rec["weight"] = format_weight(w);
    rec["casimir_gl"] = casimir_gl(w);
    rec["casimir_super"] = casimir_super(w);
    rec["z_degree"] = format_half(z_degree2(w));
    if (in_dominant_cone(w)) {
      SuperWeight nat = natural(w);
      rec["natural"] = format_weight(nat);
      rec["natural_casimir_gl"] = casimir_gl(nat);
      rec["natural_casimir_super"] = casimir_super(nat);
    }
    results.push_back(std::move(rec));
  }
  rep["results"] = std::move(results);
  return 0;
}

int do_bruhat(const Request& rq, ordered_json& rep) {
  std::vector<std::string> parts = split_semicolons(rq.weights_text);
  if (parts.size() != 2) throw std::invalid_argument("bruhat needs exactly two weights");
  rep["params"] = {{"weights", parts}};
  SuperWeight u = parse_weight(parts[0]);
  SuperWeight v = parse_weight(parts[1]);
  ordered_json results;
  results["first"] = format_weight(u);
  results["second"] = format_weight(v);
  results["gl_leq"] = bruhat_leq(u, v);
  results["gl_geq"] = bruhat_leq(v, u);
  if (in_dominant_cone(u) && in_dominant_cone(v)) {
    results["super_leq"] = bruhat_leq_super(u, v);
    results["super_geq"] = bruhat_leq_super(v, u);
  } else {
    results["super_leq"] = nullptr;
    results["super_geq"] = nullptr;
  }
  rep["results"] = std::move(results);
  return 0;
}

int do_replab_kac(const Request& rq, ordered_json& rep) {
  int n = parse_rank(rq.n_text);
  if (n == kInfiniteN) throw std::invalid_argument("replab-kac needs finite n");
  std::vector<std::string> parts = split_semicolons(rq.weights_text);
  if (parts.size() != 1) throw std::invalid_argument("replab-kac needs exactly one weight");
  rep["params"] = {{"n", rank_json(n)}, {"weights", parts}};
  SuperWeight hw = with_n(parse_weight(parts[0]), n);
  ModuleRealization mod = build_kac_module(hw);
  bool bracket_ok = check_superbracket(mod);
  QuotientReport qr = irreducible_quotient(mod, hw);
  ordered_json results;
  results["top"] = format_weight(hw);
  results["m"] = mod.m;
  results["n"] = mod.n;
  results["dim"] = mod.dim();
  results["bracket_ok"] = bracket_ok;
  ordered_json lines = ordered_json::array();
  for (const SingularLine& line : qr.proper_lines) lines.push_back(format_weight(line.weight));
  results["proper_singular"] = std::move(lines);
  results["maximal_dim"] = qr.maximal_dim;
  results["generated_by_singulars"] = qr.generated_by_singulars;
  results["irreducible_dim"] = qr.quotient.dim();
  results["quotient_character"] = laurent_json(module_character(qr.quotient));
  rep["results"] = std::move(results);
  bool pass = bracket_ok && qr.generated_by_singulars;
  rep["pass"] = pass;
  return pass ? 0 : 3;
}

int do_replab_cohomology(const Request& rq, ordered_json& rep) {
  int n = parse_rank(rq.n_text);
  if (n == kInfiniteN) throw std::invalid_argument("replab-cohomology needs finite n");
  Partition p = parse_partition(rq.lambda_text);
  rep["params"] = {{"m", rq.m}, {"n", rank_json(n)}, {"lambda", rq.lambda_text}, {"kmax", rq.kmax}};
  CohomologyReport cr = odd_radical_cohomology(p, rq.m, n, rq.kmax);
  ordered_json degrees = ordered_json::array();
  for (const CohomologyDegree& deg : cr.degrees) {
    ordered_json d;
    d["k"] = deg.degree;
    d["cochain_dim"] = deg.cochain_dim;
    d["rank_in"] = deg.rank_in;
    d["rank_out"] = deg.rank_out;
    d["cohomology_dim"] = deg.cohomology_dim;
    ordered_json comps = ordered_json::array();
    for (const CohomologyComponent& c : deg.components)
      comps.push_back({{"weight", format_weight(c.weight)}, {"multiplicity", c.multiplicity}});
    d["components"] = std::move(comps);
    ordered_json exp = ordered_json::array();
    for (const SuperWeight& w : deg.expected) exp.push_back(format_weight(w));
    d["expected"] = std::move(exp);
    d["match"] = deg.matches_expected;
    degrees.push_back(std::move(d));
  }
  rep["results"] = {{"d_squared_zero", cr.d_squared_zero},
                    {"equivariant", cr.equivariant},
                    {"euler_consistent", cr.euler_consistent},
                    {"all_match", cr.all_match},
                    {"degrees", std::move(degrees)}};
  bool pass = cr.d_squared_zero && cr.equivariant && cr.euler_consistent && cr.all_match;
  rep["pass"] = pass;
  return pass ? 0 : 3;
}

int do_replab_verma(const Request& rq, ordered_json& rep) {
  rep["params"] = {{"depth", rq.depth}};
  VermaGl12Report vr = verma_gl12_study(rq.depth);
  ordered_json lines = ordered_json::array();
  for (const VermaSingularLine& line : vr.proper_lines)
    lines.push_back({{"weight", format_weight(line.weight)},
                     {"depth", line.depth},
                     {"vector", line.description}});
  ordered_json quotient_singular = ordered_json::array();
  for (const SuperWeight& w : vr.quotient_singular_weights) quotient_singular.push_back(format_weight(w));
  rep["results"] = {{"depth", vr.depth},
                    {"window_dim", vr.window_dim},
                    {"proper_lines", std::move(lines)},
                    {"submodule_window_dim", vr.submodule_window_dim},
                    {"quotient_window_dim", vr.quotient_window_dim},
                    {"quotient_dim_is_four", vr.quotient_dim_is_four},
                    {"kac_match", vr.kac_match},
                    {"quotient_singular", std::move(quotient_singular)},
                    {"irreducible_dim", vr.irreducible_dim}};
  bool pass = vr.proper_lines.size() == 2 && vr.quotient_dim_is_four && vr.kac_match &&
              vr.irreducible_dim == 3 && vr.quotient_singular_weights.size() == 1 &&
              vr.quotient_singular_weights[0] == make_weight(1, 2, {-1}, {1, 1});
  rep["pass"] = pass;
  return pass ? 0 : 3;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact layer resolution and verification toolkit for hook highest weight modules"};
  app.require_subcommand(1);

  Request rq;
  CLI::App* resolve = app.add_subcommand("resolve", "coset layers with invariants and truncation flags");
  CLI::App* veuler = app.add_subcommand("verify-euler", "alternating character sum against the hook character");
  CLI::App* vincomp = app.add_subcommand("verify-incomparable", "pairwise order check within each layer");
  CLI::App* hs = app.add_subcommand("hs", "hook character of a partition");
  CLI::App* casimir = app.add_subcommand("casimir", "quadratic invariants of weights");
  CLI::App* bruhat = app.add_subcommand("bruhat", "order comparison of two weights");
  CLI::App* rkac = app.add_subcommand("replab-kac", "matrix realization with singular lines and quotient");
  CLI::App* rcoh = app.add_subcommand("replab-cohomology", "odd radical cohomology against predicted layers");
  CLI::App* rverma = app.add_subcommand("replab-verma-gl12", "window study of the distinguished rank (1|2) module");

  for (CLI::App* sub : {resolve, veuler, vincomp, hs, casimir, bruhat, rkac, rcoh, rverma}) {
    sub->add_option("--format", rq.format, "json or table")->check(CLI::IsMember({"json", "table"}));
    sub->add_option("--out", rq.out_file, "write the report to a file");
  }
  for (CLI::App* sub : {resolve, veuler, vincomp, hs, rcoh})
    sub->add_option("-m", rq.m, "negative block size")->required()->check(CLI::PositiveNumber);
  for (CLI::App* sub : {resolve, veuler, hs, rkac, rcoh})
    sub->add_option("-n", rq.n_text, "positive block size or \"inf\"")->required();
  for (CLI::App* sub : {resolve, veuler, vincomp, hs, rcoh})
    sub->add_option("--lambda", rq.lambda_text, "partition, comma separated");
  for (CLI::App* sub : {resolve, vincomp, rcoh})
    sub->add_option("--kmax", rq.kmax, "largest layer")->required()->check(CLI::NonNegativeNumber);
  veuler->add_option("--depth", rq.depth, "verification window")->required()->check(CLI::NonNegativeNumber);
  rverma->add_option("--depth", rq.depth, "lowering degree window")->default_val(6);
  for (CLI::App* sub : {casimir, bruhat, rkac})
    sub->add_option("--weights", rq.weights_text, "semicolon-separated weight strings")->required();

  std::vector<const char*> argv;
  argv.push_back("kacres");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    ordered_json rep;
    int code = 0;
    if (resolve->parsed()) {
      rep["command"] = "resolve";
      code = do_resolve(rq, rep);
    } else if (veuler->parsed()) {
      rep["command"] = "verify-euler";
      code = do_verify_euler(rq, rep);
    } else if (vincomp->parsed()) {
      rep["command"] = "verify-incomparable";
      code = do_verify_incomparable(rq, rep);
    } else if (hs->parsed()) {
      rep["command"] = "hs";
      code = do_hs(rq, rep);
    } else if (casimir->parsed()) {
      rep["command"] = "casimir";
      code = do_casimir(rq, rep);
    } else if (bruhat->parsed()) {
      rep["command"] = "bruhat";
      code = do_bruhat(rq, rep);
    } else if (rkac->parsed()) {
      rep["command"] = "replab-kac";
      code = do_replab_kac(rq, rep);
    } else if (rcoh->parsed()) {
      rep["command"] = "replab-cohomology";
      code = do_replab_cohomology(rq, rep);
    } else if (rverma->parsed()) {
      rep["command"] = "replab-verma-gl12";
      code = do_replab_verma(rq, rep);
    }

    std::ostringstream body;
    if (rq.format == "table")
      render_table(rep, body);
    else
      body << rep.dump(2) << "\n";
    if (!rq.out_file.empty()) {
      std::ofstream f(rq.out_file, std::ios::binary);
      if (!f) {
        err << "error: cannot open " << rq.out_file << "\n";
        return 1;
      }
      f << body.str();
    } else {
      out << body.str();
    }
    return code;
  } catch (const guard_error& e) {
    err << "guard: " << e.what() << "\n";
    return 4;
  } catch (const std::invalid_argument& e) {
    err << "usage: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace kacres
