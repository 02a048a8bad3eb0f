// Command-line front end for the autocomplexity library.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "autocomplexity/automata.hpp"
#include "autocomplexity/cache.hpp"
#include "autocomplexity/complexity.hpp"
#include "autocomplexity/errors.hpp"
#include "autocomplexity/metrics.hpp"
#include "autocomplexity/studies.hpp"
#include "autocomplexity/words.hpp"

namespace ac = autocomplexity;
using ordered_json = nlohmann::ordered_json;

namespace {

enum Exit : int {
  kOk = 0,
  kInternal = 1,
  kUsage = 2,
  kParse = 3,
  kBudget = 4,
  kCapacity = 5,
  kVerificationFailed = 6,
};

struct Globals {
  std::string cache_dir;
  std::size_t jobs = 1;
  std::uint64_t budget = ac::Budget{}.max_nodes;
  std::size_t max_states = 0;
};

std::unique_ptr<ac::Solver> make_solver(const Globals& g) {
  std::shared_ptr<ac::ComplexityCache> cache;
  if (auto dir = ac::ComplexityCache::resolve_directory(g.cache_dir)) {
    cache = std::make_shared<ac::ComplexityCache>(*dir);
    for (const auto& w : cache->warnings()) std::cerr << "warning: " << w << "\n";
  } else {
    cache = std::make_shared<ac::ComplexityCache>();
  }
  return std::make_unique<ac::Solver>(cache, ac::Budget{g.max_states, g.budget});
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string sequence_string(const std::vector<ac::State>& seq) {
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out += seq[i] >= 10 || seq[i - 1] >= 10 ? "." : "";
    out += std::to_string(seq[i]);
  }
  return out;
}

std::string fixed(double v) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(6) << v;
  return out.str();
}

std::size_t dot_pair_size(const ac::WitnessCertificate& c) {
  return ac::is_conditional(c.kind) ? c.target.alphabet_size() : 0;
}

int emit_result(const ac::ComplexityResult& r, const std::string& format,
                const std::string& cert_path) {
  if (!cert_path.empty()) {
    std::ofstream out(cert_path, std::ios::binary);
    out << ac::to_json(r.certificate);
    if (!out) throw ac::Error("failed to write " + cert_path);
  }
  if (format == "json") {
    std::cout << ac::to_json(r.certificate);
  } else if (format == "dot") {
    std::cout << ac::to_dot(r.certificate.nfa, dot_pair_size(r.certificate));
  } else {
    std::cout << r.value << "\n";
    std::cout << "witness sequence: " << sequence_string(r.witness_sequence) << "\n";
    std::cout << "edges: " << r.certificate.nfa.edge_count() << "\n";
  }
  return kOk;
}

ordered_json report_json(const ac::SparseWitnessReport& r) {
  ordered_json out;
  out["exact_value"] = r.exact_value;
  out["unique_value"] = r.unique_value;
  out["unique_witness_edge_counts"] = r.unique_witness_edge_counts;
  ordered_json largest = ordered_json::array();
  for (const auto& s : r.largest_unique_sequences) largest.push_back(sequence_string(s));
  out["largest_unique_sequences"] = largest;
  ordered_json wits = ordered_json::array();
  for (const auto& w : r.exact_witnesses) {
    ordered_json e;
    ordered_json seqs = ordered_json::array();
    for (const auto& s : w.sequences) seqs.push_back(sequence_string(s));
    e["sequences"] = seqs;
    e["edges"] = w.edge_count();
    e["edge_minimal"] = w.edge_minimal;
    e["unique_witness"] = w.unique_witness;
    e["sparse"] = w.sparse;
    wits.push_back(e);
  }
  out["exact_witnesses"] = wits;
  out["sparse_non_unique"] = r.sparse_non_unique().size();
  return out;
}

ordered_json metric_report_json(const ac::MetricReport& r) {
  auto list = [](const std::vector<ac::Violation>& vs) {
    ordered_json out = ordered_json::array();
    for (const auto& v : vs) out.push_back({{"indices", v.indices}, {"values", v.values}});
    return out;
  };
  ordered_json out;
  out["n"] = r.n;
  out["kind"] = ac::to_string(r.kind);
  out["ground_set_size"] = r.ground_set_size;
  out["triangle_checks"] = r.triangle_checks;
  out["violations"] = r.violation_count();
  out["identity_violations"] = list(r.identity_violations);
  out["symmetry_violations"] = list(r.symmetry_violations);
  out["triangle_violations"] = list(r.triangle_violations);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Automatic complexity of finite words: exact values, certificates, metrics"};
  app.require_subcommand(1, 1);
  Globals g;
  app.add_option("--cache-dir", g.cache_dir,
                 std::string("Cache directory (overrides ") + ac::kCacheDirEnv + ")");
  app.add_option("--jobs", g.jobs, "Worker threads for pair workloads")
      ->check(CLI::Range(std::size_t{1}, std::size_t{256}));
  app.add_option("--budget", g.budget, "Node budget per query");
  app.add_option("--max-states", g.max_states, "State ceiling per query (0 = natural ceiling)");

  std::function<int()> action;

  // complexity
  auto* c_cmd = app.add_subcommand("complexity", "Complexity of one word, with certificate");
  std::string c_word, c_kind = "anu", c_given, c_format = "text", c_cert;
  std::size_t c_alphabet = 0;
  bool c_given_set = false;
  c_cmd->add_option("word", c_word, "Digit string (may be empty)")->required();
  c_cmd->add_option("--kind", c_kind, "anu, ane, a, aminus, anu-cond, ane-cond, aminus-cond");
  c_cmd->add_option("--given", c_given, "Condition word for conditional kinds");
  c_cmd->add_option("--alphabet", c_alphabet, "Alphabet size (default: largest digit + 1)");
  c_cmd->add_option("--format", c_format)->check(CLI::IsMember({"text", "json", "dot"}));
  c_cmd->add_option("--cert", c_cert, "Also write the certificate JSON to this file");
  c_cmd->callback([&] {
    c_given_set = c_cmd->count("--given") > 0;
    action = [&] {
      ac::ComplexityQuery q;
      q.kind = ac::complexity_kind_from_string(c_kind);
      q.target = ac::parse_word_token(c_word, c_alphabet);
      if (c_given_set) q.condition = ac::parse_word_token(c_given);
      q.validate();
      auto solver = make_solver(g);
      return emit_result(solver->solve(q), c_format, c_cert);
    };
  });

  // conditional
  auto* cond_cmd = app.add_subcommand("conditional", "Conditional complexity A(x|y)");
  std::string cond_x, cond_y, cond_kind = "anu", cond_format = "text", cond_cert;
  cond_cmd->add_option("x", cond_x)->required();
  cond_cmd->add_option("y", cond_y)->required();
  cond_cmd->add_option("--kind", cond_kind)->check(CLI::IsMember({"anu", "ane", "aminus"}));
  cond_cmd->add_option("--format", cond_format)->check(CLI::IsMember({"text", "json", "dot"}));
  cond_cmd->add_option("--cert", cond_cert, "Also write the certificate JSON to this file");
  cond_cmd->callback([&] {
    action = [&] {
      ac::ComplexityQuery q;
      q.kind = ac::complexity_kind_from_string(cond_kind + "-cond");
      q.target = ac::parse_word_token(cond_x);
      q.condition = ac::parse_word_token(cond_y);
      q.validate();
      auto solver = make_solver(g);
      return emit_result(solver->solve(q), cond_format, cond_cert);
    };
  });

  // metric
  auto* m_cmd = app.add_subcommand("metric", "One metric value for a pair");
  std::string m_kind, m_x, m_y, m_base = "unique", m_format = "text";
  m_cmd->add_option("kind", m_kind, "jnum, jnum-max, j, jmax")->required();
  m_cmd->add_option("x", m_x)->required();
  m_cmd->add_option("y", m_y)->required();
  m_cmd->add_option("--base", m_base, "Complexity feeding the metric")
      ->check(CLI::IsMember({"unique", "deterministic"}));
  m_cmd->add_option("--format", m_format)->check(CLI::IsMember({"text", "json"}));
  m_cmd->callback([&] {
    action = [&] {
      const auto kind = ac::metric_kind_from_string(m_kind);
      const auto base = m_base == "unique" ? ac::ComplexityBase::unique
                                           : ac::ComplexityBase::deterministic;
      auto solver = make_solver(g);
      const auto c = ac::pair_complexities(ac::parse_word_token(m_x), ac::parse_word_token(m_y),
                                           *solver, base);
      const double v = ac::metric_from(kind, c);
      if (m_format == "json") {
        ordered_json out;
        out["kind"] = m_kind;
        out["value"] = v;
        out["x"] = c.x;
        out["y"] = c.y;
        out["x_given_y"] = c.x_given_y;
        out["y_given_x"] = c.y_given_x;
        out["track"] = c.track;
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << fixed(v) << "\n";
      }
      return kOk;
    };
  });

  // verify-metric
  auto* v_cmd = app.add_subcommand("verify-metric", "Exhaustive metric-axiom check");
  std::size_t v_n = 0, v_alphabet = 2;
  std::string v_kind, v_format = "text";
  v_cmd->add_option("--n", v_n)->required();
  v_cmd->add_option("--kind", v_kind, "jnum, jnum-max, j, jmax")->required();
  v_cmd->add_option("--alphabet", v_alphabet)->check(CLI::Range(2, 10));
  v_cmd->add_option("--format", v_format)->check(CLI::IsMember({"text", "json"}));
  v_cmd->callback([&] {
    action = [&] {
      auto solver = make_solver(g);
      const auto r = ac::verify_metric(v_n, ac::metric_kind_from_string(v_kind), *solver, g.jobs,
                                       v_alphabet);
      if (v_format == "json") {
        std::cout << metric_report_json(r).dump(2) << "\n";
      } else {
        std::cout << "n=" << r.n << " kind=" << ac::to_string(r.kind)
                  << " ground_set=" << r.ground_set_size
                  << " triangle_checks=" << r.triangle_checks << ": " << r.violation_count()
                  << " violations\n";
        const auto ground = ac::metric_ground_set(v_n, v_alphabet);
        auto show = [&](const char* label, const std::vector<ac::Violation>& vs) {
          for (const auto& v : vs) {
            std::cout << "  " << label;
            for (auto i : v.indices) std::cout << " " << ground[i].to_string();
            for (auto d : v.values) std::cout << " " << fixed(d);
            std::cout << "\n";
          }
        };
        show("identity", r.identity_violations);
        show("symmetry", r.symmetry_violations);
        show("triangle", r.triangle_violations);
      }
      return r.is_metric() ? kOk : kVerificationFailed;
    };
  });

  // table
  auto* t_cmd = app.add_subcommand("table", "Distribution of A_Nu(x|y) over binary pairs");
  std::size_t t_n = 0;
  std::vector<std::uint64_t> t_sample;
  std::string t_format = "text";
  auto* t_n_opt = t_cmd->add_option("--n", t_n, "Exhaustive rows 0..n");
  auto* t_sample_opt =
      t_cmd->add_option("--sample", t_sample, "Sampled row: n samples seed")->expected(3);
  t_n_opt->excludes(t_sample_opt);
  t_cmd->add_option("--format", t_format)->check(CLI::IsMember({"text", "csv", "json"}));
  t_cmd->callback([&] {
    if (!t_n_opt->count() && !t_sample_opt->count()) {
      throw CLI::RequiredError("table needs --n or --sample");
    }
    action = [&] {
      auto solver = make_solver(g);
      std::vector<ac::DistributionRow> rows;
      if (t_sample_opt->count()) {
        rows.push_back(ac::sample_distribution(t_sample[0], t_sample[1], t_sample[2], *solver,
                                               g.jobs));
      } else {
        rows = ac::distribution_table(t_n, *solver, g.jobs);
      }
      if (t_format == "csv") {
        std::cout << ac::format_table_csv(rows);
      } else if (t_format == "json") {
        std::cout << ac::format_table_json(rows);
      } else {
        std::cout << ac::format_table_text(rows);
      }
      return kOk;
    };
  });

  // classify
  auto* k_cmd = app.add_subcommand("classify", "Pairs at J-distance 1");
  std::size_t k_n = 0, k_alphabet = 2;
  bool k_exhaustive = false, k_check = false;
  k_cmd->add_option("--n", k_n)->required();
  k_cmd->add_option("--alphabet", k_alphabet)->check(CLI::Range(2, 10));
  k_cmd->add_flag("--exhaustive", k_exhaustive, "Compute every pair instead of the fast path");
  k_cmd->add_flag("--check", k_check, "Compare with the binary characterization");
  k_cmd->callback([&] {
    action = [&] {
      auto solver = make_solver(g);
      const auto pairs = ac::classify_unit_distance(k_n, *solver, !k_exhaustive, k_alphabet, g.jobs);
      ordered_json out = ordered_json::array();
      for (const auto& [x, y] : pairs) out.push_back({x.to_string(), y.to_string()});
      std::cout << out.dump() << "\n";
      if (k_check) {
        if (k_alphabet != 2) throw std::invalid_argument("--check applies to binary words only");
        if (pairs != ac::expected_unit_distance_pairs(k_n)) {
          std::cerr << "classification differs from the characterization\n";
          return int{kVerificationFailed};
        }
        std::cerr << "classification matches the characterization\n";
      }
      return int{kOk};
    };
  });

  // search-emergent
  auto* e_cmd = app.add_subcommand("search-emergent", "Words of maximal complexity whose square is simple");
  std::size_t e_max = 0, e_alphabet = 2;
  e_cmd->add_option("--max-len", e_max)->required();
  e_cmd->add_option("--alphabet", e_alphabet)->check(CLI::Range(1, 10));
  e_cmd->callback([&] {
    action = [&] {
      auto solver = make_solver(g);
      for (const auto& w : ac::search_emergent(e_max, e_alphabet, *solver)) {
        std::cout << w.to_string() << "\n";
      }
      return kOk;
    };
  });

  // sparse
  auto* s_cmd = app.add_subcommand("sparse", "Sparse exact-acceptance witnesses");
  std::string s_x, s_y, s_format = "text";
  std::size_t s_scan = 0;
  s_cmd->add_option("x", s_x);
  s_cmd->add_option("y", s_y, "Condition word (omit for the unconditional case)");
  s_cmd->add_option("--scan", s_scan, "Scan all binary slow words up to this length instead");
  s_cmd->add_option("--format", s_format)->check(CLI::IsMember({"text", "json"}));
  s_cmd->callback([&] {
    action = [&] {
      auto solver = make_solver(g);
      if (s_cmd->count("--scan")) {
        const auto found = ac::scan_sparse_unconditional(s_scan, 2, *solver);
        for (const auto& w : found) std::cout << w.to_string() << "\n";
        std::cout << found.size() << " words with sparse non-unique witnesses\n";
        return kOk;
      }
      if (!s_cmd->count("x")) throw std::invalid_argument("sparse needs a word");
      std::optional<ac::Word> y;
      if (s_cmd->count("y")) y = ac::parse_word_token(s_y);
      const auto r = ac::sparse_witness_report(ac::parse_word_token(s_x), y, *solver);
      if (s_format == "json") {
        std::cout << report_json(r).dump(2) << "\n";
        return kOk;
      }
      std::cout << "exact value: " << r.exact_value << "\n";
      std::cout << "unique value: " << r.unique_value << "\n";
      std::cout << "unique witness edge counts:";
      for (auto e : r.unique_witness_edge_counts) std::cout << " " << e;
      std::cout << "\n";
      for (const auto& w : r.exact_witnesses) {
        std::cout << "exact witness edges=" << w.edge_count()
                  << (w.edge_minimal ? " edge-minimal" : "") << (w.sparse ? " sparse" : "")
                  << (w.unique_witness ? " unique" : "") << " sequences:";
        for (const auto& s : w.sequences) std::cout << " " << sequence_string(s);
        std::cout << "\n";
      }
      std::cout << "sparse non-unique witnesses: " << r.sparse_non_unique().size() << "\n";
      return kOk;
    };
  });

  // check
  auto* chk_cmd = app.add_subcommand("check", "Verify a certificate file");
  std::string chk_file;
  chk_cmd->add_option("file", chk_file)->required();
  chk_cmd->callback([&] {
    action = [&] {
      const auto cert = ac::from_json(read_file(chk_file));
      const auto verdict = ac::verify_certificate(cert);
      if (verdict.ok) {
        std::cout << "OK " << ac::to_string(cert.kind) << " " << cert.claimed_states
                  << " states\n";
        return int{kOk};
      }
      std::cout << "FAILED: " << verdict.diagnostic << "\n";
      return int{kVerificationFailed};
    };
  });

  // export-dot
  auto* d_cmd = app.add_subcommand("export-dot", "Graphviz rendering of a certificate file");
  std::string d_file;
  d_cmd->add_option("file", d_file)->required();
  d_cmd->callback([&] {
    action = [&] {
      const auto cert = ac::from_json(read_file(d_file));
      std::cout << ac::to_dot(cert.nfa, dot_pair_size(cert));
      return kOk;
    };
  });

  // cache
  auto* cache_cmd = app.add_subcommand("cache", "Inspect or maintain the on-disk cache");
  std::string cache_op;
  cache_cmd->add_option("operation", cache_op)
      ->required()
      ->check(CLI::IsMember({"stats", "compact", "clear"}));
  cache_cmd->callback([&] {
    action = [&] {
      auto dir = ac::ComplexityCache::resolve_directory(g.cache_dir);
      if (!dir) {
        throw std::invalid_argument(std::string("no cache directory (use --cache-dir or ") +
                                    ac::kCacheDirEnv + ")");
      }
      ac::ComplexityCache cache(*dir);
      if (cache_op == "compact") cache.compact();
      if (cache_op == "clear") cache.clear();
      std::cout << "file: " << cache.file()->string() << "\n";
      std::cout << "entries: " << cache.size() << "\n";
      std::cout << "skipped lines: " << cache.warnings().size() << "\n";
      return kOk;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    return action();
  } catch (const ac::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const ac::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const ac::CapacityError& e) {
    std::cerr << "capacity exceeded: " << e.what() << "\n";
    return kCapacity;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternal;
  }
}
