#include "rif/cli.hpp"

#include "rif/bounds.hpp"
#include "rif/config.hpp"
#include "rif/construct.hpp"
#include "rif/error.hpp"
#include "rif/family.hpp"
#include "rif/io.hpp"
#include "rif/scheme.hpp"
#include "rif/search.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace rif::cli {

namespace {

using nlohmann::json;

std::string bool_str(bool b) { return b ? "true" : "false"; }

void emit_family(const KSetFamily& fam, const std::string& out_path, std::ostream& out) {
  if (out_path.empty() || out_path == "-")
    write_family(out, fam);
  else
    write_family_file(out_path, fam);
}

KSetFamily load_family(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") return read_family(in);
  return read_family_file(path);
}

void print_bounds(const BoundReport& rep, bool json_mode, std::ostream& out) {
  if (json_mode) {
    json doc;
    doc["n"] = rep.n;
    doc["k"] = rep.k;
    json entries = json::array();
    for (const auto& e : rep.entries) {
      json row;
      row["name"] = e.name;
      if (e.value) row["value"] = e.value->str();
      else row["value"] = nullptr;
      row["applicable"] = e.applicable;
      row["note"] = e.note;
      entries.push_back(std::move(row));
    }
    doc["bounds"] = std::move(entries);
    doc["verdict"] = rep.verdict;
    out << doc.dump() << "\n";
    return;
  }
  for (const auto& e : rep.entries)
    out << e.name << "\t" << (e.value ? e.value->str() : "none") << "\t"
        << (e.applicable ? "yes" : "no") << "\t" << e.note << "\n";
  out << "verdict\t" << rep.verdict << "\n";
}

void print_verify(const KSetFamily& fam, std::optional<int> s, bool json_mode, std::ostream& out) {
  const auto deg = degree_profile(fam);
  std::int64_t lo = deg[1], hi = deg[1];
  for (int x = 2; x <= fam.n; ++x) {
    lo = std::min(lo, deg[x]);
    hi = std::max(hi, deg[x]);
  }
  const auto reg = is_regular(fam);
  const bool intersecting = is_intersecting(fam);
  const InnerDistribution dist = inner_distribution(fam);

  if (json_mode) {
    json doc;
    doc["n"] = fam.n;
    doc["k"] = fam.k;
    doc["size"] = fam.size();
    if (reg) doc["delta"] = *reg;
    else doc["delta"] = nullptr;
    doc["regular"] = reg.has_value();
    doc["intersecting"] = intersecting;
    json inner = json::array();
    for (const auto& a : dist.a) inner.push_back(rat_str(a));
    doc["inner_distribution"] = std::move(inner);
    out << doc.dump() << "\n";
    return;
  }

  out << "n " << fam.n << "\n";
  out << "k " << fam.k << "\n";
  out << "size " << fam.size() << "\n";
  out << "intersecting: " << bool_str(intersecting) << "\n";
  out << "degrees: min " << lo << " max " << hi << "\n";
  if (reg)
    out << "regular: true (delta=" << *reg << ")\n";
  else
    out << "regular: false\n";
  out << "diversity: " << diversity(fam) << "\n";
  if (lo > 0) out << "irregularity-ratio: " << rat_str(irregularity_ratio(fam)) << "\n";
  if (reg) out << "ratio: " << rat_str(family_ratio(fam)) << "\n";
  out << "inner-distribution:";
  for (const auto& a : dist.a) out << " " << rat_str(a);
  out << "\n";
  if (fam.n >= 2 * fam.k) {
    const auto mw = macwilliams_transform(scheme_tables(fam.n, fam.k), dist);
    bool nonneg = true;
    out << "macwilliams:";
    for (const auto& e : mw) {
      out << " " << rat_str(e);
      nonneg = nonneg && e >= 0;
    }
    out << "\n";
    out << "macwilliams-nonnegative: " << bool_str(nonneg) << "\n";
  } else {
    out << "macwilliams: skipped (needs n >= 2k)\n";
  }
  if (s) {
    const auto sub = is_subset_regular(fam, *s);
    out << "subset-regular(s=" << *s << "): " << bool_str(sub.has_value());
    if (sub) out << " (delta_" << *s << "=" << *sub << ")";
    out << "\n";
  }
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  if (const char* cap_env = std::getenv("RIF_SIZE_CAP")) {
    char* end = nullptr;
    const long long cap = std::strtoll(cap_env, &end, 10);
    if (end == cap_env || *end != '\0' || cap < 1) {
      err << "RIF_SIZE_CAP must be a positive integer\n";
      return 2;
    }
    set_size_cap(cap);
  } else {
    set_size_cap(1'000'000);
  }

  CLI::App app{"regular intersecting family toolkit"};
  app.require_subcommand(1);
  bool json_mode = false;

  // bounds
  auto* bounds_cmd = app.add_subcommand("bounds", "closed-form bounds for (n,k)");
  int b_n = 0, b_k = 0;
  std::optional<int> b_s;
  bounds_cmd->add_option("--n", b_n, "ground-set size")->required();
  bounds_cmd->add_option("--k", b_k, "set size")->required();
  bounds_cmd->add_option("--s", b_s, "additional odd s for the subset-regular bound");
  bounds_cmd->add_flag("--json", json_mode, "machine-readable output");

  // scheme
  auto* scheme_cmd = app.add_subcommand("scheme", "Johnson scheme J(n,k) tables");
  int s_n = 0, s_k = 0;
  std::string s_matrix;
  bool s_gamma = false;
  scheme_cmd->add_option("--n", s_n, "ground-set size")->required();
  scheme_cmd->add_option("--k", s_k, "set size")->required();
  scheme_cmd->add_option("--matrix", s_matrix, "P or Q")->check(CLI::IsMember({"P", "Q"}));
  scheme_cmd->add_flag("--gamma", s_gamma, "print gamma coefficients");

  // lp
  auto* lp_cmd = app.add_subcommand("lp", "Delsarte LP maximum");
  int l_n = 0, l_k = 0;
  bool l_regular = false;
  lp_cmd->add_option("--n", l_n, "ground-set size")->required();
  lp_cmd->add_option("--k", l_k, "set size")->required();
  lp_cmd->add_flag("--regular", l_regular, "add the regularity constraint");

  // construct
  auto* con_cmd = app.add_subcommand("construct", "explicit constructions");
  con_cmd->require_subcommand(1);
  std::string c_out;
  int c_q = 0, c_l = 0, c_z = 0, c_m = 0, c_k = 0;
  std::string c_input, c_a, c_b;

  auto* pp_cmd = con_cmd->add_subcommand("pp", "projective plane PG(2,q)");
  pp_cmd->add_option("--q", c_q, "prime power order")->required();
  pp_cmd->add_option("--out", c_out, "output file (default stdout)");

  auto* ext_cmd = con_cmd->add_subcommand("extend", "all (k+l)-supersets of members");
  ext_cmd->add_option("--l", c_l, "extension size")->required();
  ext_cmd->add_option("--input", c_input, "input family file")->required();
  ext_cmd->add_option("--out", c_out, "output file (default stdout)");

  auto* sum_cmd = con_cmd->add_subcommand("sum", "disjoint union construction F+G");
  sum_cmd->add_option("--a", c_a, "left family file")->required();
  sum_cmd->add_option("--b", c_b, "right family file")->required();
  sum_cmd->add_option("--out", c_out, "output file (default stdout)");

  auto* prod_cmd = con_cmd->add_subcommand("product", "product construction F1 x F2");
  prod_cmd->add_option("--a", c_a, "left family file")->required();
  prod_cmd->add_option("--b", c_b, "right family file")->required();
  prod_cmd->add_option("--out", c_out, "output file (default stdout)");

  auto* comp_cmd = con_cmd->add_subcommand("complete", "all m-subsets of [z]");
  comp_cmd->add_option("--z", c_z, "ground-set size")->required();
  comp_cmd->add_option("--m", c_m, "subset size")->required();
  comp_cmd->add_option("--out", c_out, "output file (default stdout)");

  auto* prop3_cmd = con_cmd->add_subcommand("prop3", "plane + complete-layer sum");
  prop3_cmd->add_option("--q", c_q, "prime power order")->required();
  prop3_cmd->add_option("--l", c_l, "layer multiplier")->required();
  prop3_cmd->add_option("--out", c_out, "output file (default stdout)");

  auto* bd_cmd = con_cmd->add_subcommand("brace-daykin", "maximum family on [2k], k not a power of 2");
  bd_cmd->add_option("--k", c_k, "set size")->required();
  bd_cmd->add_option("--out", c_out, "output file (default stdout)");

  auto* neq_cmd = con_cmd->add_subcommand("neq2k", "maximum family on [2k], k a power of 2");
  neq_cmd->add_option("--k", c_k, "set size")->required();
  neq_cmd->add_option("--out", c_out, "output file (default stdout)");

  // search
  auto* search_cmd = app.add_subcommand("search", "find large regular intersecting families");
  int se_n = 0, se_k = 0, se_threads = 1;
  std::string se_strategy, se_out;
  std::optional<std::int64_t> se_target;
  double se_time = 0;
  std::uint64_t se_seed = 0;
  search_cmd->add_option("--n", se_n, "ground-set size")->required();
  search_cmd->add_option("--k", se_k, "set size")->required();
  search_cmd->add_option("--strategy", se_strategy, "cyclic or dfs")
      ->required()
      ->check(CLI::IsMember({"cyclic", "dfs"}));
  search_cmd->add_option("--target", se_target, "exact family size to search for (dfs)");
  search_cmd->add_option("--time-limit", se_time, "seconds before returning best-so-far");
  search_cmd->add_option("--seed", se_seed, "recorded reproducibility seed");
  search_cmd->add_option("--threads", se_threads, "worker threads (dfs)");
  search_cmd->add_option("--out", se_out, "witness output file");
  search_cmd->add_flag("--json", json_mode, "machine-readable output");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "verify a rif-family/1 file");
  std::string v_input;
  std::optional<int> v_s;
  verify_cmd->add_option("--input", v_input, "family file (default stdin)");
  verify_cmd->add_option("--s", v_s, "also check s-subset-regularity");
  verify_cmd->add_flag("--json", json_mode, "machine-readable output");

  std::vector<const char*> argv;
  argv.push_back("rif");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());

    if (*bounds_cmd) {
      print_bounds(bound_report(b_n, b_k, b_s), json_mode, out);
    } else if (*scheme_cmd) {
      const SchemeTables t = scheme_tables(s_n, s_k);
      const bool full = s_matrix.empty() && !s_gamma;
      if (full) {
        out << "v " << t.v.str() << "\n";
        out << "r:";
        for (const auto& r : t.r) out << " " << r.str();
        out << "\nf:";
        for (const auto& f : t.f) out << " " << f.str();
        out << "\n";
      }
      if (full || s_matrix == "P") {
        if (full) out << "P:\n";
        for (int j = 0; j <= t.k; ++j) {
          for (int i = 0; i <= t.k; ++i) out << (i ? " " : "") << t.P(j, i).str();
          out << "\n";
        }
      }
      if (full || s_matrix == "Q") {
        if (full) out << "Q:\n";
        for (int j = 0; j <= t.k; ++j) {
          for (int i = 0; i <= t.k; ++i) out << (i ? " " : "") << rat_str(t.Q(i, j));
          out << "\n";
        }
      }
      if (s_gamma) {
        const auto gamma = gamma_coefficients(s_n, s_k);
        for (std::size_t i = 0; i < gamma.size(); ++i) out << (i ? " " : "") << gamma[i].str();
        out << "\n";
      }
    } else if (*lp_cmd) {
      const LPOutcome res = lp_max_regular_intersecting(l_n, l_k, l_regular);
      if (res.status == LPStatus::Infeasible) {
        out << "status Infeasible\n";
      } else {
        out << "optimum " << rat_str(res.optimum) << "\n";
        out << "witness";
        for (const auto& w : res.witness) out << " " << rat_str(w);
        out << "\n";
      }
    } else if (*con_cmd) {
      KSetFamily fam;
      if (*pp_cmd) fam = projective_plane(c_q);
      else if (*ext_cmd) fam = extend_family(load_family(c_input, in), c_l);
      else if (*sum_cmd) fam = disjoint_sum(read_family_file(c_a), read_family_file(c_b));
      else if (*prod_cmd) fam = product_family(read_family_file(c_a), read_family_file(c_b));
      else if (*comp_cmd) fam = complete_uniform(c_z, c_m);
      else if (*prop3_cmd) fam = prop3_construction(c_q, c_l);
      else if (*bd_cmd) fam = brace_daykin(c_k);
      else fam = neq2k_construction(c_k);
      emit_family(fam, c_out, out);
    } else if (*search_cmd) {
      SearchOptions opt;
      opt.target = se_target;
      opt.time_limit_seconds = se_time;
      opt.seed = se_seed;
      opt.threads = se_threads;
      if (se_strategy == "cyclic" && se_target) {
        err << "--target applies to the dfs strategy\n";
        return 2;
      }
      const SearchResult res = se_strategy == "cyclic" ? cyclic_orbit_search(se_n, se_k, opt)
                                                       : dfs_search(se_n, se_k, opt);
      const std::int64_t delta = res.family ? std::int64_t(se_k) * res.size / se_n : 0;
      if (json_mode) {
        json doc;
        doc["n"] = se_n;
        doc["k"] = se_k;
        doc["size"] = res.size;
        if (res.family) doc["delta"] = delta;
        else doc["delta"] = nullptr;
        doc["exhaustive"] = res.exhaustive;
        doc["nodes"] = res.explored_nodes;
        out << doc.dump() << "\n";
      } else {
        out << "strategy " << (res.strategy == Strategy::CyclicOrbit ? "cyclic" : "dfs") << "\n";
        out << "size " << res.size << "\n";
        out << "delta " << (res.family ? std::to_string(delta) : std::string("none")) << "\n";
        out << "exhaustive " << bool_str(res.exhaustive) << "\n";
        out << "nodes " << res.explored_nodes << "\n";
        if (res.family) {
          const CertificateReport cert = verify_certificate(res);
          out << "certificate " << (cert.all_pass ? "pass" : "FAIL") << "\n";
        }
      }
      if (res.family && !se_out.empty()) emit_family(*res.family, se_out, out);
      if (res.family && se_out.empty() && !json_mode) write_family(out, *res.family);
    } else if (*verify_cmd) {
      print_verify(load_family(v_input, in), v_s, json_mode, out);
    }
    return 0;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

} // namespace rif::cli
