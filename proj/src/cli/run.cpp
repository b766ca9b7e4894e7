#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "green/cli.hpp"
#include "green/coinvariants.hpp"
#include "green/error.hpp"
#include "green/io.hpp"
#include "green/oracle.hpp"
#include "green/partition.hpp"
#include "green/springer_datum.hpp"
#include "green/weyl_datum.hpp"

namespace green::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Inputs {
  WeylDatum weyl;
  std::optional<SpringerDatum> springer;
  std::string group_hash;
  std::string springer_hash;

  nlohmann::json provenance() const {
    nlohmann::json j{{"group", group_hash}};
    if (springer) j["springer"] = springer_hash;
    return j;
  }
  std::string provenance_line() const {
    std::string s = "group=" + group_hash;
    if (springer) s += " springer=" + springer_hash;
    return s;
  }
};

class Session {
 public:
  Session(const RunConfig& config, std::ostream& out, std::ostream& err)
      : config_(config), out_(out), err_(err), cache_(resolve_cache_dir(config)) {}

  int dispatch() {
    const auto& cmd = config_.command;
    if (cmd == "gen-a") return gen_a();
    if (cmd == "omega") return omega_cmd();
    if (cmd == "solve") return solve_cmd();
    if (cmd == "ext") return ext_cmd();
    if (cmd == "fake-degrees") return fake_degrees_cmd();
    if (cmd == "verify") return verify_cmd();
    if (cmd == "oracle") return oracle_cmd();
    if (cmd == "check") return check_cmd();
    throw UsageError("unknown command '" + cmd + "'");
  }

 private:
  int require_n() const {
    if (!config_.n) throw UsageError(config_.command + " requires --n");
    return *config_.n;
  }

  WeylDatum symmetric_group(int n) {
    const auto key = Cache::key_for({{"schema", kWeylSchema}, {"generator", "symmetric"}, {"n", n}});
    if (auto hit = cache_.get(key, err_)) {
      try {
        return weyl_from_json(nlohmann::json::parse(*hit));
      } catch (const std::exception&) {
        err_ << "warning: cached group datum for n=" << n << " failed to load; recomputing\n";
      }
    }
    auto w = generate_symmetric_group(n);
    cache_.put(key, to_json(w).dump());
    return w;
  }

  Inputs load_inputs(bool need_springer) {
    Inputs in;
    if (config_.group_path) {
      in.weyl = load_datum(*config_.group_path);
    } else if (config_.n) {
      in.weyl = symmetric_group(*config_.n);
    } else {
      throw UsageError(config_.command + " requires --group or --n");
    }
    in.group_hash = content_hash(to_json(in.weyl));
    if (need_springer) {
      if (config_.springer_path) {
        in.springer = load_springer(*config_.springer_path, in.weyl);
      } else if (config_.n && !config_.group_path) {
        in.springer = generate_type_A(*config_.n);
      } else {
        throw UsageError(config_.command + " requires --springer (or --n for type A)");
      }
      in.springer_hash = content_hash(to_json(*in.springer));
    }
    return in;
  }

  OmegaMatrix omega_for(const Inputs& in) {
    const auto key = Cache::key_for({{"schema", "green-omega/1"}, {"group", in.group_hash}, {"springer", in.springer_hash}});
    if (auto hit = cache_.get(key, err_)) {
      try {
        auto omega = omega_from_json(nlohmann::json::parse(*hit));
        if (omega.labels == in.weyl.irreducible_labels() && check_omega(omega).empty()) return omega;
      } catch (const std::exception&) {
      }
      err_ << "warning: cached omega matrix is inconsistent; recomputing\n";
    }
    auto omega = build_omega(in.weyl, *in.springer);
    cache_.put(key, to_json(omega).dump());
    return omega;
  }

  void emit(const std::string& content) {
    if (config_.out_path) {
      write_file_atomic(*config_.out_path, content);
    } else {
      out_ << content;
    }
  }

  std::string header(char comment, const std::string& schema, const Inputs& in) const {
    return std::string(1, comment) + " schema=" + schema + " " + in.provenance_line() + "\n";
  }

  // -------------------------------------------------------------------------

  int gen_a() {
    const int n = require_n();
    const fs::path dir = config_.out_path.value_or(".");
    const auto weyl = symmetric_group(n);
    const auto springer = generate_type_A(n);
    const auto group_file = dir / ("S" + std::to_string(n) + ".weyl.json");
    const auto springer_file = dir / ("S" + std::to_string(n) + ".springer.json");
    save_datum(weyl, group_file);
    save_springer(springer, springer_file);
    out_ << "wrote " << group_file.string() << "\nwrote " << springer_file.string() << "\n";
    return kOk;
  }

  int omega_cmd() {
    const auto in = load_inputs(true);
    const auto omega = omega_for(in);
    switch (config_.format) {
      case Format::json: {
        auto j = to_json(omega);
        j["inputs"] = in.provenance();
        emit(j.dump(2) + "\n");
        break;
      }
      case Format::latex:
        emit(header('%', "green-omega/1", in) + latex_matrix(omega.entries, omega.labels, "\\omega"));
        break;
      case Format::csv:
        emit(header('#', "green-omega/1", in) + csv_matrix(omega.entries, omega.labels));
        break;
    }
    return kOk;
  }

  int solve_cmd() {
    const auto in = load_inputs(true);
    const auto omega = omega_for(in);
    std::optional<std::uint64_t> seed;
    if (!config_.seeds.empty()) seed = config_.seeds.front();
    const auto blocks = block_structure(*in.springer, omega.labels, seed);
    const auto pair = solve(omega, blocks);
    const auto report = verify(pair, omega);
    if (!report.passed()) {
      err_ << "solution failed verification:\n" << report.summary();
      return kInternalFailure;
    }
    if (config_.chi || config_.orbit) {
      if (!config_.chi || !config_.orbit) throw UsageError("a stalk report needs both --chi and --orbit");
      emit(to_text(stalk_report(pair, *config_.chi, *config_.orbit)));
      return kOk;
    }
    const auto shown = normalize(pair, config_.normalization);
    const std::string pname = config_.normalization == Normalization::plain   ? "p"
                              : config_.normalization == Normalization::prime ? "p'"
                                                                              : "p''";
    switch (config_.format) {
      case Format::json: {
        auto j = to_json(shown, content_hash(to_json(omega)));
        j["inputs"] = in.provenance();
        emit(j.dump(2) + "\n");
        break;
      }
      case Format::latex:
        emit(header('%', kSolutionSchema, in) + "% normalization=" + to_string(shown.normalization) + "\n" +
             latex_matrix(shown.P, shown.labels, pname) + latex_matrix(shown.Lambda, shown.labels, "\\lambda"));
        break;
      case Format::csv:
        emit(header('#', kSolutionSchema, in) + "# normalization=" + to_string(shown.normalization) + "\n" +
             csv_matrix(shown.P, shown.labels));
        break;
    }
    return kOk;
  }

  int ext_cmd() {
    const auto in = load_inputs(false);
    const auto& w = in.weyl;
    if (config_.format == Format::csv) {
      emit(ext_tables_csv(w, in.provenance_line()));
      return kOk;
    }
    if (config_.format == Format::latex) throw UsageError("ext supports --format json or csv");
    nlohmann::json j{{"schema", "green-ext/1"}, {"inputs", in.provenance()}, {"d", w.flag_dimension()},
                     {"labels", w.irreducible_labels()}};
    auto rows = nlohmann::json::array();
    for (std::size_t i = 0; i < w.irreducibles.size(); ++i) {
      auto row = nlohmann::json::array();
      for (std::size_t k = 0; k < w.irreducibles.size(); ++k) row.push_back(to_json(ext_dimension_table(w, i, k).poly()));
      rows.push_back(std::move(row));
    }
    j["tables"] = std::move(rows);
    emit(j.dump(2) + "\n");
    return kOk;
  }

  int fake_degrees_cmd() {
    const auto in = load_inputs(false);
    const auto& w = in.weyl;
    if (config_.format == Format::csv) {
      emit(fake_degrees_csv(w, in.provenance_line()));
      return kOk;
    }
    if (config_.format == Format::latex) throw UsageError("fake-degrees supports --format json or csv");
    nlohmann::json j{{"schema", "green-fake-degrees/1"}, {"inputs", in.provenance()}, {"d", w.flag_dimension()}};
    auto list = nlohmann::json::array();
    for (std::size_t i = 0; i < w.irreducibles.size(); ++i)
      list.push_back({{"label", w.irreducibles[i].label}, {"poly", to_json(fake_degree(w, i).poly())}});
    j["fake_degrees"] = std::move(list);
    emit(j.dump(2) + "\n");
    return kOk;
  }

  int verify_cmd() {
    if (!config_.solution_path) throw UsageError("verify requires --solution");
    const auto doc = read_json_file(*config_.solution_path);
    const auto pair = solution_from_json(doc);
    const auto in = load_inputs(true);
    const auto omega = omega_for(in);
    const auto expected_hash = content_hash(to_json(omega));
    bool hash_ok = true;
    if (doc.contains("omega_hash") && doc["omega_hash"] != expected_hash) {
      hash_ok = false;
      out_ << "FAIL omega-hash\n     solution was computed from " << doc["omega_hash"].get<std::string>()
           << ", inputs give " << expected_hash << "\n";
    }
    const auto report = verify(pair, omega);
    out_ << report.summary();
    return report.passed() && hash_ok ? kOk : kInternalFailure;
  }

  int oracle_cmd() {
    const int n = require_n();
    const auto parts = partitions_of(n);
    nlohmann::json j{{"schema", "green-oracle/1"}, {"n", n}};
    nlohmann::json kf = nlohmann::json::array();
    for (const auto& lam : parts)
      for (const auto& mu : parts)
        kf.push_back({{"lambda", partition_label(lam)},
                      {"mu", partition_label(mu)},
                      {"poly", to_json(oracle::kostka_foulkes(lam, mu))}});
    j["kostka_foulkes"] = std::move(kf);
    if (n <= 6) {
      const auto ex = oracle::coinvariant_expand(n, -1);
      nlohmann::json mult = nlohmann::json::array();
      for (std::size_t i = 0; i < ex.weyl.irreducibles.size(); ++i)
        mult.push_back({{"label", ex.weyl.irreducibles[i].label}, {"poly", to_json(ex.multiplicities[i])}});
      j["coinvariant_multiplicities"] = std::move(mult);
    }
    emit(j.dump(2) + "\n");
    return kOk;
  }

  int check_cmd();

  const RunConfig& config_;
  std::ostream& out_;
  std::ostream& err_;
  Cache cache_;
};

// Full invariant and oracle suite for S_n.
int Session::check_cmd() {
  const int n = require_n();
  const auto in = load_inputs(true);
  const auto& w = in.weyl;
  const auto& springer = *in.springer;
  const std::size_t nirr = w.irreducibles.size();
  bool all = true;

  auto report = [&](const std::string& name, const std::vector<std::string>& problems) {
    all = all && problems.empty();
    out_ << (problems.empty() ? "PASS " : "FAIL ") << name << "\n";
    for (std::size_t k = 0; k < problems.size() && k < 10; ++k) out_ << "     " << problems[k] << "\n";
  };
  // Each stage reports its own failure rather than aborting the suite.
  auto guarded = [&](const std::string& name, auto&& body) {
    std::vector<std::string> problems;
    try {
      body(problems);
    } catch (const std::exception& e) {
      problems.push_back(e.what());
    }
    report(name, problems);
  };

  guarded("datum-invariants", [&](auto& p) { p = validate(w); });
  guarded("springer-invariants", [&](auto& p) { p = validate(springer, &w, w.flag_dimension()); });

  std::optional<OmegaMatrix> omega;
  guarded("omega-invariants", [&](auto& p) {
    omega = omega_for(in);
    p = check_omega(*omega);
  });
  guarded("complementary-degrees", [&](auto& p) {
    for (std::size_t i = 0; i < nirr; ++i)
      if (!complementary_degree_check(w, i)) p.push_back("fails for " + w.irreducibles[i].label);
  });
  guarded("ext-contracts", [&](auto& p) {
    for (std::size_t i = 0; i < nirr; ++i)
      for (std::size_t k = 0; k < nirr; ++k) {
        const auto e = ext_dimension_table(w, i, k);
        const auto where = "(" + w.irreducibles[i].label + ", " + w.irreducibles[k].label + ")";
        if (e.coefficient(0) != (i == k ? 1 : 0)) p.push_back("degree-0 term is not delta at " + where);
        if (!e.poly().has_only_even_exponents()) p.push_back("odd cohomological degree populated at " + where);
        if (e.poly().at_one() != Rational(w.irreducibles[i].dim * w.irreducibles[k].dim))
          p.push_back("total dimension is not dim*dim at " + where);
      }
  });
  if (n <= 6) {
    guarded("molien-vs-brute-force", [&](auto& p) {
      const auto ex = oracle::coinvariant_expand(n, -1);
      for (std::size_t i = 0; i < nirr; ++i)
        if (!(ex.multiplicities[i] == fake_degree(w, i).poly())) p.push_back("disagree on " + w.irreducibles[i].label);
    });
  } else {
    out_ << "SKIP molien-vs-brute-force (n > 6)\n";
  }

  std::optional<SolutionPair> pair;
  guarded("solve-and-verify", [&](auto& p) {
    if (!omega) throw std::runtime_error("no omega matrix");
    pair = solve(*omega, block_structure(springer, omega->labels));
    const auto r = verify(*pair, *omega);
    for (const auto& c : r.checks)
      for (const auto& f : c.findings) p.push_back(c.name + ": " + f);
  });
  guarded("uniqueness", [&](auto& p) {
    if (!omega) throw std::runtime_error("no omega matrix");
    std::vector<std::uint64_t> seeds = config_.seeds;
    if (seeds.size() < 3) seeds = {1, 2, 3};
    const auto r = oracle::uniqueness_harness(*omega, springer, seeds);
    p = r.findings;
  });
  guarded("kostka-foulkes-bridge", [&](auto& p) {
    if (!pair) throw std::runtime_error("no solution");
    const auto pp = normalize(*pair, Normalization::double_prime);
    for (std::size_t i = 0; i < nirr; ++i)
      for (std::size_t k = 0; k < nirr; ++k) {
        const auto lam = parse_partition(pp.labels[i]);
        const auto mu = parse_partition(pp.labels[k]);
        if (!lam || !mu) throw std::runtime_error("labels are not partitions");
        const auto expected = oracle::kostka_foulkes(*lam, *mu).bar().shifted(2 * n_statistic(*mu));
        if (!(pp.P(i, k) == expected))
          p.push_back("p''[" + pp.labels[i] + ", " + pp.labels[k] + "] = " + pp.P(i, k).to_string() +
                      ", expected " + expected.to_string());
      }
  });
  out_ << (all ? "check passed" : "check FAILED") << " for S" << n << "\n";
  return all ? kOk : kInternalFailure;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    Session session(config, out, err);
    return session.dispatch();
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kValidationFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.severity() == Severity::validation ? kValidationFailure : kInternalFailure;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kValidationFailure;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalFailure;
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Green functions of the nilpotent cone from Weyl group data"};
  app.require_subcommand(1);
  RunConfig config;
  std::string format = "json";
  std::string normalization = "double_prime";
  std::string cache_dir;

  const std::map<std::string, Format> formats{{"json", Format::json}, {"csv", Format::csv}, {"latex", Format::latex}};

  auto add = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--group", config.group_path, "group datum file (green-weyl/1)");
    sub->add_option("--springer", config.springer_path, "Springer datum file (green-springer/1)");
    sub->add_option("--solution", config.solution_path, "solution file (green-solution/1)");
    sub->add_option("--out", config.out_path, "output file (directory for gen-a)");
    sub->add_option("--n", config.n, "use the built-in S_n / type A data");
    sub->add_option("--format", format, "json | csv | latex")->check(CLI::IsMember({"json", "csv", "latex"}));
    sub->add_option("--normalization", normalization, "plain | prime | double_prime")
        ->check(CLI::IsMember({"plain", "lusztig_plain", "prime", "double_prime"}));
    sub->add_option("--seeds", config.seeds, "seeds for linear extensions")->delimiter(',');
    sub->add_option("--cache-dir", cache_dir, "cache directory (default $GREEN_CACHE_DIR)");
    sub->add_flag("--no-cache", config.no_cache, "disable the on-disk cache");
    sub->add_option("--chi", config.chi, "solve: irreducible for a stalk report");
    sub->add_option("--orbit", config.orbit, "solve: orbit for a stalk report");
    return sub;
  };
  add("gen-a", "write group and Springer data for S_n");
  add("omega", "compute the Omega matrix");
  add("solve", "solve P Lambda P^t = Omega");
  add("ext", "Ext-dimension tables");
  add("fake-degrees", "fake degrees");
  add("verify", "re-verify a solution file");
  add("oracle", "Kostka-Foulkes and coinvariant oracles");
  add("check", "full invariant and oracle suite for S_n");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kValidationFailure;
  }
  config.command = app.get_subcommands().front()->get_name();
  config.format = formats.at(format);
  config.normalization = *parse_normalization(normalization);
  if (!cache_dir.empty()) config.cache_dir = cache_dir;
  return run(config, out, err);
}

}  // namespace green::cli
