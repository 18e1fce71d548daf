// tsemi: command-line tools for finite transformation semigroups --
// semigroup closure, Green's classes, generating-set algorithms, exact and
// Monte Carlo evaluation of the random-semigroup probabilities, analytic
// bound constants, and the degree-3 subsemigroup survey.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "tsemi/asymptotics.hpp"
#include "tsemi/exactprob.hpp"
#include "tsemi/gensets.hpp"
#include "tsemi/greens.hpp"
#include "tsemi/json_out.hpp"
#include "tsemi/montecarlo.hpp"
#include "tsemi/semigroup.hpp"
#include "tsemi/table1.hpp"
#include "tsemi/transform.hpp"

namespace {

using tsemi::json;
using tsemi::Transformation;

struct GlobalOptions {
  std::string format = "json";
  std::uint64_t seed = 0;
  int workers = 1;
  long budget_ms = 0;  // 0 = unlimited
  std::size_t rank_ceiling = tsemi::kDefaultRankCeiling;
  std::size_t enum_ceiling = tsemi::kDefaultEnumCeiling;
  std::string file;
  std::vector<std::string> literals;
};

// Extracts bracketed transformation literals from a line ("# ..." comments
// stripped, whitespace free-form).
std::vector<Transformation> parse_generator_set(const std::string& line) {
  std::vector<Transformation> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t open = line.find('[', pos);
    if (open == std::string::npos) {
      break;
    }
    const std::size_t close = line.find(']', open);
    if (close == std::string::npos) {
      throw tsemi::invalid_input_error("unbalanced '[' in generator set: " +
                                       line);
    }
    out.push_back(
        tsemi::parse_transformation(line.substr(open, close - open + 1)));
    pos = close + 1;
  }
  return out;
}

// One generator set per line; '#' starts a comment.
std::vector<std::vector<Transformation>> read_generator_file(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw tsemi::invalid_input_error("cannot open file: " + path);
  }
  std::vector<std::vector<Transformation>> sets;
  std::string line;
  while (std::getline(in, line)) {
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) {
      line.resize(hash);
    }
    auto gens = parse_generator_set(line);
    if (!gens.empty()) {
      sets.push_back(std::move(gens));
    }
  }
  if (sets.empty()) {
    throw tsemi::invalid_input_error("no generator sets in file: " + path);
  }
  return sets;
}

std::vector<std::vector<Transformation>> collect_inputs(
    const GlobalOptions& opt) {
  if (!opt.file.empty()) {
    return read_generator_file(opt.file);
  }
  std::string joined;
  for (const auto& lit : opt.literals) {
    joined += lit + " ";
  }
  auto gens = parse_generator_set(joined);
  if (gens.empty()) {
    throw tsemi::invalid_input_error(
        "no generators given (pass literals or --file)");
  }
  return {std::move(gens)};
}

void warn_large_degree(const std::vector<Transformation>& gens) {
  if (!gens.empty() && gens.front().degree() > 6) {
    std::cerr << "warning: degree " << gens.front().degree()
              << " > 6; full closures may be very large\n";
  }
}

void render_tsv(const json& value, std::ostream& out, const std::string& key) {
  if (value.is_object()) {
    for (const auto& [k, v] : value.items()) {
      render_tsv(v, out, key.empty() ? k : key + "." + k);
    }
  } else if (value.is_array()) {
    bool scalars = true;
    for (const auto& v : value) {
      scalars = scalars && (v.is_primitive());
    }
    if (scalars) {
      std::string joined;
      for (const auto& v : value) {
        joined +=
            (v.is_string() ? v.get<std::string>() : v.dump()) + " ";
      }
      if (!joined.empty()) {
        joined.pop_back();
      }
      out << key << '\t' << joined << '\n';
    } else {
      for (std::size_t i = 0; i < value.size(); ++i) {
        render_tsv(value[i], out, key + "." + std::to_string(i));
      }
    }
  } else {
    out << key << '\t'
        << (value.is_string() ? value.get<std::string>() : value.dump())
        << '\n';
  }
}

void emit(const GlobalOptions& opt, json result) {
  result["schema"] = 1;
  if (opt.format == "tsv") {
    render_tsv(result, std::cout, "");
  } else {
    std::cout << result.dump(2) << '\n';
  }
}

// Runs `fn` per input generator set and emits one result (or an array).
void run_per_set(const GlobalOptions& opt,
                 const std::function<json(const std::vector<Transformation>&)>&
                     fn) {
  const auto inputs = collect_inputs(opt);
  if (inputs.size() == 1) {
    emit(opt, fn(inputs.front()));
    return;
  }
  json results = json::array();
  for (const auto& gens : inputs) {
    results.push_back(fn(gens));
  }
  json out;
  out["results"] = results;
  emit(opt, out);
}

json bounds_report(int resolution_f, int resolution_g) {
  using namespace tsemi;
  json out;
  const double w = omega();
  const double alpha_f = w / (1.0 + w);
  const double x0 = F1_argmax();
  const double y0 = F2_half_argmax();
  const double f1_x0 = F1(x0);
  const double f2_half_y0 = F2(0.5, y0);
  const double f3_max = F3(1.0 / (1.0 + std::sqrt(std::exp(1.0))));
  const auto sp = stationary_point_G();
  const double g_stat = G_three_var(sp.alpha, sp.alpha, sp.gamma);
  const auto max_f = grid_max_F_two_var(resolution_f, true);
  const auto max_g = grid_max_G_three_var(resolution_g, true);

  out["omega"] = w;
  out["decay_rate_g"] = decay_rate_G();
  out["f_single_argmax"] = alpha_f;
  out["f_single_max"] = F_single(alpha_f);
  out["x0"] = x0;
  out["f1_x0"] = f1_x0;
  out["y0"] = y0;
  out["f2_half_y0"] = f2_half_y0;
  out["f3_max"] = f3_max;
  out["alpha"] = sp.alpha;
  out["gamma"] = sp.gamma;
  out["g_stationary"] = g_stat;
  out["max_f_xy"] = to_json(max_f);
  out["max_g_xyz"] = to_json(max_g);

  json checks;
  checks["omega_defining_equation"] =
      std::abs(w * std::exp(w) - 1.0) <= 1e-12;
  checks["f_single_max_is_omega"] = std::abs(F_single(alpha_f) - w) <= 1e-9;
  checks["x0_gt_0.78"] = x0 > 0.78;
  checks["f1_x0_lt_1.75"] = f1_x0 < 1.75;
  checks["f2_half_y0_lt_0.56"] = f2_half_y0 < 0.56;
  checks["f3_max_negative"] = f3_max < 0.0;
  checks["alpha_in_(0.68152,0.68153)"] =
      sp.alpha > 0.68152 && sp.alpha < 0.68153;
  checks["gamma_in_(0.44403,0.44407)"] =
      sp.gamma > 0.44403 && sp.gamma < 0.44407;
  checks["g_stationary_lt_0.999"] = g_stat < 0.999;
  checks["max_f_lt_1"] = max_f.max_value < 1.0;
  checks["max_g_lt_1"] = max_g.max_value < 1.0;
  checks["decay_rate_negative"] = decay_rate_G() < 0.0;
  bool all = true;
  for (const auto& [k, v] : checks.items()) {
    all = all && v.get<bool>();
  }
  out["checks"] = checks;
  out["all_checks_pass"] = all;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tools for finite transformation semigroups"};
  app.require_subcommand(1);
  GlobalOptions opt;
  auto add_globals = [&](CLI::App* cmd) {
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "tsv"}))
        ->capture_default_str();
    cmd->add_option("--seed", opt.seed, "random seed")->capture_default_str();
    cmd->add_option("--workers", opt.workers, "worker threads")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--budget-ms", opt.budget_ms,
                    "wall-clock budget in ms (0 = unlimited; exceeding it "
                    "aborts with exit code 2)")
        ->capture_default_str();
    cmd->add_option("--rank-ceiling", opt.rank_ceiling,
                    "max semigroup size for exact rank search")
        ->capture_default_str();
    cmd->add_option("--enum-ceiling", opt.enum_ceiling,
                    "max semigroup size for irredundant-set enumeration")
        ->capture_default_str();
  };
  add_globals(&app);

  // Literals like [2,3,1] collide with CLI11's own bracket-list syntax, so
  // generator arguments are taken verbatim from the remaining args.
  std::vector<CLI::App*> genset_commands;
  auto add_genset_inputs = [&](CLI::App* cmd) {
    cmd->allow_extras();
    cmd->footer("generators are passed as literals, e.g. [2,3,1] [1,1,2]");
    cmd->add_option("--file", opt.file,
                    "file with one generator set per line ('#' comments)");
    add_globals(cmd);
    genset_commands.push_back(cmd);
  };

  auto* cmd_closure = app.add_subcommand(
      "closure", "enumerate the semigroup generated by the input");
  add_genset_inputs(cmd_closure);

  auto* cmd_greens =
      app.add_subcommand("greens", "D-classes and their partial order");
  add_genset_inputs(cmd_greens);

  auto* cmd_greedy = app.add_subcommand(
      "greedy", "greedy generating set over the discovery order");
  add_genset_inputs(cmd_greedy);

  std::string order = "desc";
  auto* cmd_smallgen = app.add_subcommand(
      "smallgen", "greedy generating set over the J-class order");
  add_genset_inputs(cmd_smallgen);
  cmd_smallgen->add_option("--order", order, "J-class traversal order")
      ->check(CLI::IsMember({"desc", "asc"}))
      ->capture_default_str();

  auto* cmd_irredundant = app.add_subcommand(
      "irredundant", "test whether the given generators are irredundant");
  add_genset_inputs(cmd_irredundant);

  auto* cmd_rank =
      app.add_subcommand("rank", "exact rank (smallest generating set size)");
  add_genset_inputs(cmd_rank);

  auto* cmd_ubiquity = app.add_subcommand(
      "ubiquity",
      "do all irredundant generating sets share one cardinality?");
  add_genset_inputs(cmd_ubiquity);

  auto* cmd_suffcond = app.add_subcommand(
      "suffcond", "rank(xyz) < rank(y) for all generator triples?");
  add_genset_inputs(cmd_suffcond);

  std::string exact_quantity;
  long exact_n = 0;
  long exact_k = 2;
  std::size_t exact_digits = 12;
  auto* cmd_exact =
      app.add_subcommand("exact", "exact G_n, T_n, V_n or the P_k(n) bound");
  add_globals(cmd_exact);
  cmd_exact
      ->add_option("quantity", exact_quantity, "one of G, T, V, P")
      ->required()
      ->check(CLI::IsMember({"G", "T", "V", "P"}));
  cmd_exact->add_option("--n", exact_n, "degree")->required();
  cmd_exact->add_option("--k", exact_k, "generator count (P only)")
      ->capture_default_str();
  cmd_exact->add_option("--digits", exact_digits, "decimal digits")
      ->capture_default_str();

  std::string mc_quantity;
  std::size_t mc_n = 0;
  std::size_t mc_k = 2;
  std::uint64_t mc_samples = 10000;
  bool mc_wilson = false;
  auto* cmd_mc = app.add_subcommand("mc", "Monte Carlo estimates");
  add_globals(cmd_mc);
  cmd_mc->add_option("--quantity", mc_quantity, "one of G, T, V, SUFF")
      ->required()
      ->check(CLI::IsMember({"G", "T", "V", "SUFF"}));
  cmd_mc->add_option("--n", mc_n, "degree")->required();
  cmd_mc->add_option("--k", mc_k, "generator count (SUFF only)")
      ->capture_default_str();
  cmd_mc->add_option("--samples", mc_samples, "sample count")
      ->capture_default_str();
  cmd_mc->add_flag("--wilson", mc_wilson, "Wilson 95% interval");

  int res_f = 1000;
  int res_g = 150;
  auto* cmd_bounds = app.add_subcommand(
      "bounds", "analytic bound constants with bracket checks");
  add_globals(cmd_bounds);
  cmd_bounds->add_option("--resolution-f", res_f, "grid resolution for F(x,y)")
      ->capture_default_str();
  cmd_bounds->add_option("--resolution-g", res_g, "grid resolution for G")
      ->capture_default_str();

  std::string t1_order = "desc";
  auto* cmd_table1 = app.add_subcommand(
      "table1", "rank vs output size over all subsemigroup classes of T_3");
  add_globals(cmd_table1);
  cmd_table1->add_option("--order", t1_order, "J-class traversal order")
      ->check(CLI::IsMember({"desc", "asc", "both"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e);  // --help
    }
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }

  for (CLI::App* cmd : genset_commands) {
    if (cmd->parsed()) {
      opt.literals = cmd->remaining();
    }
  }

  if (opt.budget_ms > 0) {
    std::thread([ms = opt.budget_ms] {
      std::this_thread::sleep_for(std::chrono::milliseconds(ms));
      std::cerr << "error: resource limit: budget of " << ms
                << " ms exceeded\n";
      std::exit(2);
    }).detach();
  }

  using namespace tsemi;
  try {
    if (cmd_closure->parsed()) {
      run_per_set(opt, [&](const auto& gens) {
        warn_large_degree(gens);
        return to_json(closure(gens));
      });
    } else if (cmd_greens->parsed()) {
      run_per_set(opt, [&](const auto& gens) {
        warn_large_degree(gens);
        const auto table = closure(gens);
        return to_json(table, d_classes(table));
      });
    } else if (cmd_greedy->parsed()) {
      run_per_set(opt, [&](const auto& gens) {
        warn_large_degree(gens);
        return to_json(greedy(closure(gens).elements));
      });
    } else if (cmd_smallgen->parsed()) {
      run_per_set(opt, [&](const auto& gens) {
        warn_large_degree(gens);
        return to_json(small_generating_set(closure(gens),
                                            order == "asc"
                                                ? Direction::ascending
                                                : Direction::descending));
      });
    } else if (cmd_irredundant->parsed()) {
      run_per_set(opt, [&](const auto& gens) {
        json out;
        out["generators"] = to_json(gens);
        out["is_irredundant"] = is_irredundant(gens);
        return out;
      });
    } else if (cmd_rank->parsed()) {
      run_per_set(opt, [&](const auto& gens) {
        warn_large_degree(gens);
        const auto table = closure(gens);
        json out;
        out["semigroup_size"] = table.size();
        out["rank"] = semigroup_rank(table, opt.rank_ceiling);
        return out;
      });
    } else if (cmd_ubiquity->parsed()) {
      run_per_set(opt, [&](const auto& gens) {
        const auto table = closure(gens);
        const auto sets =
            enumerate_irredundant_generating_sets(table, opt.enum_ceiling);
        std::set<std::size_t> sizes;
        for (const auto& s : sets) {
          sizes.insert(s.size());
        }
        json out;
        out["semigroup_size"] = table.size();
        out["irredundant_generating_sets"] = sets.size();
        out["cardinalities"] = sizes;
        out["ubiquitous"] = sizes.size() == 1;
        return out;
      });
    } else if (cmd_suffcond->parsed()) {
      run_per_set(opt, [&](const auto& gens) {
        json out;
        out["generators"] = to_json(gens);
        out["satisfied"] = satisfies_sufficient_condition(gens);
        return out;
      });
    } else if (cmd_exact->parsed()) {
      BigRational value;
      if (exact_quantity == "G") {
        value = exact_G(exact_n);
      } else if (exact_quantity == "T") {
        value = exact_T(exact_n);
      } else if (exact_quantity == "V") {
        value = exact_V(exact_n);
      } else {
        value = bound_P(exact_n, exact_k);
      }
      json out;
      out["quantity"] = exact_quantity;
      out["n"] = exact_n;
      if (exact_quantity == "P") {
        out["k"] = exact_k;
      }
      out["value"] = value.to_string();
      out["decimal"] = value.decimal(exact_digits);
      emit(opt, out);
    } else if (cmd_mc->parsed()) {
      Estimate e;
      if (mc_quantity == "SUFF") {
        e = estimate_sufficient(mc_n, mc_k, mc_samples, opt.seed, opt.workers,
                                mc_wilson);
      } else {
        const Quantity q = mc_quantity == "G"   ? Quantity::G
                           : mc_quantity == "T" ? Quantity::T
                                                : Quantity::V;
        e = estimate(q, mc_n, mc_samples, opt.seed, opt.workers, mc_wilson);
      }
      emit(opt, to_json(e));
    } else if (cmd_bounds->parsed()) {
      emit(opt, bounds_report(res_f, res_g));
    } else if (cmd_table1->parsed()) {
      if (t1_order == "both") {
        const auto desc = table1(Direction::descending, opt.workers);
        const auto asc = table1(Direction::ascending, opt.workers);
        json out;
        out["descending"] = to_json(desc);
        out["ascending"] = to_json(asc);
        out["ascending_mean_not_smaller"] =
            asc.mean_output_size >= desc.mean_output_size;
        emit(opt, out);
      } else {
        emit(opt, to_json(table1(t1_order == "asc" ? Direction::ascending
                                                   : Direction::descending,
                                 opt.workers)));
      }
    }
  } catch (const invalid_input_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const resource_limit_error& e) {
    std::cerr << "error: resource limit: " << e.what() << '\n';
    return 2;
  } catch (const numeric_error& e) {
    std::cerr << "error: numeric: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
