#include "arp/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <ostream>

#include "arp/closed_forms.hpp"
#include "arp/ecg.hpp"
#include "arp/oracle.hpp"
#include "arp/rainbow.hpp"

namespace arp::cli {

namespace {

using nlohmann::json;

json stats_json(const SearchStats& s) {
  return json{{"nodes_expanded", s.nodes_expanded},
              {"pruned_by_rainbow", s.pruned_by_rainbow},
              {"pruned_by_bound", s.pruned_by_bound},
              {"elapsed_seconds", s.elapsed.count()}};
}

void print_formula(std::ostream& out, bool as_json, const FormulaValue& fv,
                   bool with_branch) {
  if (as_json) {
    json j{{"value", fv.value}};
    if (with_branch) j["branch"] = branch_name(fv.branch);
    out << j.dump() << '\n';
  } else {
    out << fv.value;
    if (with_branch) out << ' ' << branch_name(fv.branch);
    out << '\n';
  }
}

void print_scalar(std::ostream& out, bool as_json, i64 value) {
  if (as_json)
    out << json{{"value", value}}.dump() << '\n';
  else
    out << value << '\n';
}

int print_report(std::ostream& out, bool as_json, const SweepReport& rep) {
  if (as_json) {
    json j{{"range", rep.range_descriptor},
           {"instances", rep.instances_checked},
           {"counterexamples", rep.counterexamples},
           {"tight_cases", rep.tight_cases}};
    out << j.dump() << '\n';
  } else {
    out << "range: " << rep.range_descriptor << '\n'
        << "instances=" << rep.instances_checked
        << " counterexamples=" << rep.counterexamples.size()
        << " tight=" << rep.tight_cases.size() << '\n';
    for (const auto& cx : rep.counterexamples)
      out << "counterexample: " << cx << '\n';
  }
  return rep.passed() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"anti-Ramsey numbers for paths: formulas, constructions, "
               "rainbow path detection, and exhaustive oracles"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "structured JSON output");

  int n = 0, k = 0, a = 0;
  bool show_branch = false;

  auto* c_ar = app.add_subcommand("ar", "anti-Ramsey number AR(n,P_k)");
  c_ar->add_option("N", n)->required();
  c_ar->add_option("K", k)->required();
  c_ar->add_flag("--branch", show_branch, "also print the attaining branch");

  auto* c_ex = app.add_subcommand("ex", "Turan number ex(n,P_k)");
  c_ex->add_option("N", n)->required();
  c_ex->add_option("K", k)->required();

  auto* c_excon =
      app.add_subcommand("excon", "connected Turan number ex_con(n,P_k)");
  c_excon->add_option("N", n)->required();
  c_excon->add_option("K", k)->required();

  auto* c_h = app.add_subcommand("h", "edge count h(n,k,a) of H(n,k,a)");
  c_h->add_option("N", n)->required();
  c_h->add_option("K", k)->required();
  c_h->add_option("A", a)->required();

  std::string kind, out_path;
  auto* c_construct =
      app.add_subcommand("construct", "emit a rainbow-P_k-free coloring");
  c_construct->add_option("TYPE", kind)
      ->required()
      ->check(CLI::IsMember({"clique", "star"}));
  c_construct->add_option("N", n)->required();
  c_construct->add_option("K", k)->required();
  c_construct->add_option("--out", out_path, "output .ecg file")->required();

  std::string file;
  std::vector<std::uint64_t> cc_params;
  auto* c_detect =
      app.add_subcommand("detect", "find a rainbow P_k in an .ecg file");
  c_detect->add_option("FILE", file)->required();
  c_detect->add_option("K", k)->required();
  c_detect
      ->add_option("--color-coding", cc_params,
                   "randomized detection: ITERATIONS SEED")
      ->expected(2);

  auto* c_oracle = app.add_subcommand("oracle", "brute-force ground truth");
  c_oracle->require_subcommand(1);
  auto* o_ar = c_oracle->add_subcommand("ar", "exact AR by partition search");
  o_ar->add_option("N", n)->required();
  o_ar->add_option("K", k)->required();
  auto* o_ex = c_oracle->add_subcommand("ex", "brute-force ex(n,P_k)");
  o_ex->add_option("N", n)->required();
  o_ex->add_option("K", k)->required();
  auto* o_excon =
      c_oracle->add_subcommand("excon", "brute-force ex_con(n,P_k)");
  o_excon->add_option("N", n)->required();
  o_excon->add_option("K", k)->required();

  auto* c_verify = app.add_subcommand("verify", "exhaustive lemma sweeps");
  c_verify->require_subcommand(1);
  int max_k = 9, max_n = 30, max_t = 4;
  auto* v_parts = c_verify->add_subcommand(
      "parts", "part-sum lemma: sum of connected Turan values vs ar");
  v_parts->add_option("--max-k", max_k);
  v_parts->add_option("--max-n", max_n);
  v_parts->add_option("--max-t", max_t);
  int sub_k = 0, max_m = 18;
  auto* v_subadd = c_verify->add_subcommand(
      "subadd", "partition subadditivity of ex(.,P_k)");
  v_subadd->add_option("--k", sub_k, "single k (default: all of 2..8)");
  v_subadd->add_option("--max-m", max_m);
  int ell = 0;
  auto* v_bip = c_verify->add_subcommand(
      "bipartite", "balanced bipartite Hamilton cycle threshold");
  v_bip->add_option("--ell", ell)->required();
  int cmax_k = 60, cmax_n = 300;
  auto* v_cons = c_verify->add_subcommand(
      "consistency", "the two anti-Ramsey expressions agree");
  v_cons->add_option("--max-k", cmax_k);
  v_cons->add_option("--max-n", cmax_n);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << e.what() << '\n';
    return 2;
  }

  try {
    if (*c_ar) {
      print_formula(out, as_json, anti_ramsey(n, k), show_branch);
    } else if (*c_ex) {
      print_scalar(out, as_json, turan_path(n, k));
    } else if (*c_excon) {
      print_scalar(out, as_json, turan_path_connected(n, k));
    } else if (*c_h) {
      print_scalar(out, as_json, h_value(HParams(n, k, a)));
    } else if (*c_construct) {
      EdgeColoring col = kind == "clique" ? construct_clique_coloring(n, k)
                                          : construct_star_coloring(n, k);
      write_ecg_file(out_path, col);
      if (as_json)
        out << json{{"value", col.color_count()}, {"file", out_path}}.dump()
            << '\n';
    } else if (*c_detect) {
      EdgeColoring col = read_ecg_file(file);
      std::optional<RainbowCertificate> cert;
      if (cc_params.empty())
        cert = find_rainbow_path_exact(col, k);
      else
        cert = find_rainbow_path_colorcoding(
            col, k, static_cast<int>(cc_params[0]), cc_params[1]);
      if (as_json) {
        json j{{"witness", nullptr}};
        if (cert)
          j["witness"] =
              json{{"vertices", cert->vertices}, {"colors", cert->colors}};
        out << j.dump() << '\n';
      } else if (cert) {
        for (size_t i = 0; i < cert->vertices.size(); ++i)
          out << (i ? " " : "") << cert->vertices[i];
        out << '\n';
        for (size_t i = 0; i < cert->colors.size(); ++i)
          out << (i ? " " : "") << cert->colors[i];
        out << '\n';
      } else {
        out << "NONE\n";
      }
    } else if (*o_ar) {
      ExactArResult res = exact_ar(n, k);
      if (as_json) {
        json witness = json::array();
        for (size_t i = 0; i < res.witness.host().edges().size(); ++i) {
          const Edge& e = res.witness.host().edges()[i];
          witness.push_back({e.u, e.v, res.witness.colors()[i]});
        }
        out << json{{"value", res.value},
                    {"witness", witness},
                    {"stats", stats_json(res.stats)}}
                   .dump()
            << '\n';
      } else {
        out << res.value << '\n'
            << "nodes=" << res.stats.nodes_expanded
            << " pruned_rainbow=" << res.stats.pruned_by_rainbow
            << " pruned_bound=" << res.stats.pruned_by_bound
            << " elapsed=" << res.stats.elapsed.count() << "s\n";
      }
    } else if (*o_ex) {
      print_scalar(out, as_json, brute_ex(n, k));
    } else if (*o_excon) {
      print_scalar(out, as_json, brute_ex_con(n, k));
    } else if (*v_parts) {
      return print_report(out, as_json, verify_lemma_parts(max_k, max_n, max_t));
    } else if (*v_subadd) {
      if (sub_k != 0) return print_report(out, as_json,
                                          verify_subadditivity(sub_k, max_m));
      SweepReport merged;
      merged.range_descriptor = "k in 2..8";
      for (int kk = 2; kk <= 8; ++kk) {
        SweepReport r = verify_subadditivity(kk, max_m);
        merged.instances_checked += r.instances_checked;
        merged.counterexamples.insert(merged.counterexamples.end(),
                                      r.counterexamples.begin(),
                                      r.counterexamples.end());
        merged.tight_cases.insert(merged.tight_cases.end(),
                                  r.tight_cases.begin(), r.tight_cases.end());
      }
      return print_report(out, as_json, merged);
    } else if (*v_bip) {
      return print_report(out, as_json, verify_bipartite_lemma(ell));
    } else if (*v_cons) {
      return print_report(out, as_json,
                          formula_consistency_sweep(cmax_k, cmax_n));
    }
  } catch (const std::domain_error& e) {
    err << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    err << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace arp::cli
