// Acceptance suite: one PASS/FAIL line per criterion.
//
// Exit status is 0 when every gating criterion has its expected outcome.
// Criteria listed in kKnownUnattainable are evaluated exactly as stated and
// reported as FAIL without changing the exit status.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "autocomplexity/metrics.hpp"
#include "autocomplexity/studies.hpp"

using namespace autocomplexity;

namespace {

// Pinned tolerances and time limits (seconds).
constexpr double kJaccardExpected = 0.46;
constexpr double kJaccardTolerance = 0.005;
constexpr double kExampleLimit = 10;
constexpr double kTableLimit = 600;
constexpr double kMetricLimit = 1800;
constexpr double kJaccardLimit = 60;
constexpr double kEmergentLimit = 300;
constexpr double kSparseLimit = 300;
constexpr double kUnitLimit = 600;
constexpr double kClassifyLimit = 600;
constexpr double kPropertyLimit = 1800;
constexpr double kSymmetryLimit = 60;
constexpr std::uint64_t kModeSeed = 20240615;
constexpr std::size_t kModeSamples = 10000;

const std::map<int, const char*> kKnownUnattainable = {
    {1, "the track of (0123)^3 and (012345)^2 is a permutation word of length 12, "
        "so its complexity is 7, not 12"},
    {5, "0010100 has complexity 3, below the maximum 4, so it does not qualify"},
};

Word w(const char* digits) { return Word::parse(digits); }

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string join(const std::vector<Word>& ws) {
  std::string out = "{";
  for (std::size_t i = 0; i < ws.size(); ++i) out += (i ? "," : "") + ws[i].to_string();
  return out + "}";
}

std::string fmt(double v, int digits = 3) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(digits);
  s << v;
  return s.str();
}

// Accumulates named equalities into one outcome.
struct Checks {
  Outcome out;
  void equal(const std::string& what, std::size_t got, std::size_t want) {
    if (!out.detail.empty()) out.detail += ", ";
    out.detail += what + "=" + std::to_string(got);
    if (got != want) {
      out.pass = false;
      out.detail += " (expected " + std::to_string(want) + ")";
    }
  }
  void require(const std::string& what, bool ok) {
    if (!ok) {
      out.pass = false;
      out.detail += (out.detail.empty() ? "" : ", ") + what + " failed";
    }
  }
};

Outcome worked_examples(Solver& s) {
  Checks c;
  auto timed = [&](const std::string& what, const ComplexityQuery& q, std::size_t want) {
    Timer t;
    const std::size_t v = s.value(q);
    c.equal(what, v, want);
    if (t.seconds() >= kExampleLimit) c.require(what + " within " + fmt(kExampleLimit, 0) + "s", false);
  };
  const Word x1 = w("010010010010"), y1 = w("010101010101");
  timed("A_Nu((010)^4)", unique_query(x1), 3);
  timed("A_Nu((01)^6)", unique_query(y1), 2);
  timed("A_Nu(track)", track_query(x1, y1), 6);
  timed("A_Nu(track(0123,0001))", track_query(w("0123"), w("0001")), 3);
  timed("A_Nu(0001)", unique_query(w("0001")), 2);
  const Word x3 = w("012301230123"), y3 = w("012345012345");
  timed("A_Nu(x|y)", conditional_query(x3, y3), 2);
  timed("A_Nu(y)", unique_query(y3), 6);
  timed("A_Nu(x#y)", track_query(x3, y3), 12);
  return c.out;
}

const std::vector<std::vector<std::uint64_t>> kReferenceRows = {
    {1}, {1}, {3, 1}, {7, 9}, {15, 45, 4}, {31, 197, 28}, {63, 755, 191, 15},
    {127, 2299, 1561, 109}, {255, 5905, 9604, 571, 49}, {511, 14005, 47416, 3205, 399},
    {1023, 31439, 206342, 21066, 2102, 172},
};
const std::vector<std::size_t> kReferenceModes = {1, 1, 1, 2, 2, 2, 2, 2, 3, 3, 3};

Outcome reference_rows(Solver& s, std::size_t from, std::size_t to, std::size_t jobs) {
  Outcome out;
  std::size_t matched = 0;
  for (std::size_t n = from; n <= to; ++n) {
    const auto row = distribution_row(n, s, jobs);
    std::vector<std::uint64_t> got(row.counts.begin() + 1, row.counts.end());
    if (got == kReferenceRows[n] && row.mode() == kReferenceModes[n]) {
      ++matched;
    } else {
      out.pass = false;
      out.detail += "row " + std::to_string(n) + " differs; ";
    }
  }
  out.detail += std::to_string(matched) + "/" + std::to_string(to - from + 1) +
                " rows match (n=" + std::to_string(from) + ".." + std::to_string(to) + ")";
  return out;
}

Outcome metric_axioms(Solver& s, std::size_t jobs) {
  Outcome out;
  for (MetricKind k : kAllMetrics) {
    for (std::size_t n = 1; n <= 6; ++n) {
      const auto r = verify_metric(n, k, s, jobs);
      if (!r.is_metric()) {
        out.pass = false;
        out.detail += to_string(k) + " n=" + std::to_string(n) + ": " +
                      std::to_string(r.violation_count()) + " violations; ";
      }
    }
  }
  if (out.pass) out.detail = "jnum, jnum-max, j, jmax: 0 violations for n=1..6";
  return out;
}

Outcome jaccard_example(Solver& s) {
  const double v = metric_value(MetricKind::j, w("00001000"), w("00001001"), s);
  return {std::abs(v - kJaccardExpected) <= kJaccardTolerance,
          "J=" + fmt(v, 4) + ", target " + fmt(kJaccardExpected, 2) + " +/- " +
              fmt(kJaccardTolerance, 3)};
}

Outcome emergent(Solver& s) {
  const auto seven = search_emergent(7, 2, s);
  const auto six = search_emergent(6, 2, s);
  const std::size_t square = s.unique(power(w("0001000"), 2));
  Outcome out;
  out.pass = seven == std::vector<Word>{w("0001000"), w("0010100")} && six.empty() && square == 6;
  out.detail = "max_len 7 -> " + join(seven) + " (expected {0001000,0010100}), max_len 6 -> " +
               join(six) + ", A_Nu((0001000)^2)=" + std::to_string(square);
  return out;
}

Outcome sparse(Solver& s, std::size_t scan_len) {
  Checks c;
  const auto r = sparse_witness_report(w("0000110"), w("0010100"), s);
  const std::vector<State> a = {0, 0, 1, 1, 1, 2, 0, 0}, b = {0, 1, 1, 1, 1, 2, 0, 0};
  const std::vector<State> u = {0, 1, 2, 0, 0, 2, 1, 0};
  bool six_edge = false, non_unique = false;
  for (const auto& e : r.exact_witnesses) {
    if (e.nfa.state_count() == 3 && e.edge_count() == 6 && e.edge_minimal && e.sparse &&
        std::find(e.sequences.begin(), e.sequences.end(), a) != e.sequences.end() &&
        std::find(e.sequences.begin(), e.sequences.end(), b) != e.sequences.end()) {
      six_edge = true;
      non_unique = !e.unique_witness;
    }
  }
  c.require("6-edge edge-minimal exact witness from 00111200 and 01111200", six_edge);
  c.require("it is not an A_Nu witness", non_unique);
  if (six_edge && non_unique) c.out.detail = "6-edge sparse non-unique witness from 00111200, 01111200";
  const auto seq = all_witness_sequences(conditional_query(w("0000110"), w("0010100")), 3);
  const bool has_u = std::find(seq.begin(), seq.end(), u) != seq.end();
  c.require("A_Nu witness 01200210", has_u);
  if (has_u) {
    c.equal("edges(01200210)",
            certificate_from_sequence(conditional_query(w("0000110"), w("0010100")), u)
                .nfa.edge_count(),
            7);
  }
  const auto found = scan_sparse_unconditional(scan_len, 2, s);
  c.equal("unconditional words with sparse non-unique witnesses, |x|<=" + std::to_string(scan_len),
          found.size(), 0);
  return c.out;
}

Outcome unit_conditional(Solver& s, std::size_t jobs) {
  std::size_t pairs = 0, bad = 0;
  for (std::size_t n = 1; n <= 7; ++n) {
    const auto ground = slow_words(n, 2);
    const Word zeros(std::vector<Symbol>(n, 0), 2);
    std::vector<char> wrong(ground.size() * ground.size(), 0);
    parallel_for(wrong.size(), jobs, [&](std::size_t i) {
      const Word& x = ground[i / ground.size()];
      const Word& y = ground[i % ground.size()];
      wrong[i] = (s.conditional(x, y) == 1) != (x == y || x == zeros);
    });
    pairs += wrong.size();
    bad += std::count(wrong.begin(), wrong.end(), 1);
  }
  return {bad == 0, std::to_string(pairs) + " pairs, " + std::to_string(bad) + " exceptions"};
}

Outcome classification(Solver& s, std::size_t from, std::size_t to, std::size_t jobs) {
  Outcome out;
  for (std::size_t n = from; n <= to; ++n) {
    const auto got = classify_unit_distance(n, s, true, 2, jobs);
    if (got != expected_unit_distance_pairs(n)) {
      out.pass = false;
      out.detail += "n=" + std::to_string(n) + " differs; ";
    }
  }
  const auto last = classify_unit_distance(to, s, true, 2, jobs);
  out.detail += "n=" + std::to_string(from) + ".." + std::to_string(to) +
                (out.pass ? " match" : " checked") + " (" + std::to_string(last.size()) +
                " pairs at n=" + std::to_string(to) + ")";
  return out;
}

Outcome properties(Solver& s) {
  std::vector<std::pair<std::string, std::size_t>> suites;
  auto run = [&](const std::string& name, const std::function<std::size_t()>& f) {
    suites.emplace_back(name, f());
  };
  run("Hyde n<=12", [&] {
    std::size_t bad = 0;
    for (std::size_t n = 0; n <= 12; ++n) {
      for (const Word& x : all_words(n, 2)) bad += s.unique(x) > n / 2 + 1;
    }
    return bad;
  });
  run("A_Ne<=A_Nu n<=8", [&] {
    std::size_t bad = 0;
    for (std::size_t n = 0; n <= 8; ++n) {
      for (const Word& x : all_words(n, 2)) {
        bad += s.value({ComplexityKind::ne, x, std::nullopt}) > s.unique(x);
      }
    }
    return bad;
  });
  run("track bounds n<=6", [&] {
    std::size_t bad = 0;
    for (std::size_t n = 0; n <= 6; ++n) {
      for (const Word& x : all_words(n, 2)) {
        for (const Word& y : all_words(n, 2)) {
          const std::size_t t = s.of_track(x, y);
          bad += std::max(s.unique(x), s.unique(y)) > t;
          bad += t > s.conditional(x, y) * s.unique(y);
        }
      }
    }
    return bad;
  });
  run("relativized 10^4 triples", [&] {
    std::mt19937_64 rng(20240601);
    std::size_t bad = 0;
    for (int i = 0; i < 10000; ++i) {
      const std::size_t n = 1 + rng() % 5;
      auto draw = [&] {
        std::vector<Symbol> v(n);
        for (auto& b : v) b = static_cast<Symbol>(rng() & 1u);
        return Word(v, 2);
      };
      const Word x = draw(), y = draw(), z = draw();
      bad += s.conditional(x, z) > s.conditional(y, z) * s.conditional(x, track(y, z).word());
    }
    return bad;
  });
  run("powerfree n<=10", [&] {
    std::size_t bad = 0;
    for (std::size_t n = 1; n <= 10; ++n) {
      for (const Word& x : slow_words(n, 2)) {
        for (std::size_t k = 2; k <= 4; ++k) {
          if (!contains_kth_power(x, k)) bad += s.unique(x) * k < n + 1;
        }
      }
    }
    return bad;
  });
  run("A_N(alpha^k)=|alpha|", [&] {
    std::size_t bad = 0;
    for (std::size_t a = 1; a <= 4; ++a) {
      std::vector<Symbol> v(a);
      std::iota(v.begin(), v.end(), 0);
      for (std::size_t k = 2; k <= 4; ++k) bad += s.unique(power(Word::from_symbols(v), k)) != a;
    }
    return bad;
  });
  run("primitive w^|w|", [&] {
    std::size_t bad = 0;
    for (std::size_t n = 1; n <= 4; ++n) {
      for (const Word& x : all_words(n, 2)) {
        if (is_primitive(x)) bad += s.unique(power(x, n)) < n;
      }
    }
    return bad;
  });
  run("product composition n<=6", [&] {
    std::size_t bad = 0;
    for (std::size_t n = 0; n <= 6; ++n) {
      for (const Word& x : slow_words(n, 2)) {
        for (const Word& y : slow_words(n, 2)) {
          WitnessCertificate c;
          c.kind = CertificateKind::unique;
          c.target = track(y, x).word();
          c.nfa = product_track(s.solve(conditional_query(x, y)).certificate.nfa,
                                s.solve(unique_query(y)).certificate.nfa);
          c.claimed_states = c.nfa.state_count();
          bad += !verify_certificate(c).ok;
        }
      }
    }
    return bad;
  });
  auto agrees = [&](const ComplexityQuery& q) {
    const std::size_t v = s.value(q);
    const auto o = oracle_min_states(q, 3);
    return o ? *o == v : v > 3;
  };
  run("oracle words n<=6", [&] {
    std::size_t bad = 0;
    for (std::size_t n = 0; n <= 6; ++n) {
      for (const Word& x : slow_words(n, 2)) {
        for (auto k : {ComplexityKind::nu, ComplexityKind::ne, ComplexityKind::det_partial}) {
          bad += !agrees({k, x, std::nullopt});
        }
      }
    }
    return bad;
  });
  run("oracle pairs n<=5", [&] {
    std::size_t bad = 0;
    for (std::size_t n = 0; n <= 5; ++n) {
      for (const Word& x : slow_words(n, 2)) {
        for (const Word& y : slow_words(n, 2)) {
          bad += !agrees(conditional_query(x, y));
          bad += !agrees({ComplexityKind::ne_cond, x, y});
        }
      }
    }
    return bad;
  });
  Outcome out;
  for (const auto& [name, bad] : suites) {
    if (bad) out.pass = false;
    out.detail += (out.detail.empty() ? "" : "; ") + name + (bad ? ": " + std::to_string(bad) + " failures" : ": ok");
  }
  return out;
}

Outcome symmetry_of_information(Solver& s) {
  const Word x = w("0001"), y = w("0011");
  const std::size_t xy = s.conditional(x, y), yx = s.conditional(y, x);
  const std::size_t ax = s.unique(x), ay = s.unique(y);
  return {xy * ay != yx * ax, "A(x|y)=" + std::to_string(xy) + ", A(y)=" + std::to_string(ay) +
                                  ", A(y|x)=" + std::to_string(yx) + ", A(x)=" +
                                  std::to_string(ax) + ": " + std::to_string(xy * ay) +
                                  " vs " + std::to_string(yx * ax)};
}

Outcome mode_drift(Solver& s, std::size_t jobs) {
  Outcome out;
  for (std::size_t n : {16u, 20u}) {
    const auto row = sample_distribution(n, kModeSamples, kModeSeed, s, jobs);
    const std::size_t centre = (n + 3) / 4;
    const bool ok = row.mode() + 1 >= centre && row.mode() <= centre + 1;
    out.pass = out.pass && ok;
    out.detail += (out.detail.empty() ? "" : ", ") + std::string("n=") + std::to_string(n) +
                  " mode " + std::to_string(row.mode()) + " (window " +
                  std::to_string(centre - 1) + ".." + std::to_string(centre + 1) + ")";
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  std::size_t jobs = 1;
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--jobs") jobs = std::stoul(argv[i + 1]);
  }
  std::shared_ptr<ComplexityCache> cache;
  if (auto dir = ComplexityCache::resolve_directory("")) {
    cache = std::make_shared<ComplexityCache>(*dir);
  } else {
    cache = std::make_shared<ComplexityCache>();
  }
  Solver solver(cache);

  struct Criterion {
    std::string id;
    std::string title;
    bool gating;
    double limit;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"1", "worked examples", true, 8 * kExampleLimit, [&] { return worked_examples(solver); }},
      {"2", "distribution rows n=0..7", true, kTableLimit,
       [&] { return reference_rows(solver, 0, 7, jobs); }},
      {"2x", "distribution rows n=8..10 (extended)", false, kTableLimit,
       [&] { return reference_rows(solver, 8, 10, jobs); }},
      {"3", "metric axioms, four kinds, n<=6", true, kMetricLimit,
       [&] { return metric_axioms(solver, jobs); }},
      {"4", "J(00001000,00001001)", true, kJaccardLimit, [&] { return jaccard_example(solver); }},
      {"5", "emergent simplicity", true, kEmergentLimit, [&] { return emergent(solver); }},
      {"6", "sparse witness, scan |x|<=6", true, kSparseLimit, [&] { return sparse(solver, 6); }},
      {"6x", "sparse scan |x|<=8 (extended)", false, kSparseLimit,
       [&] { return sparse(solver, 8); }},
      {"7", "unit conditional complexity, n<=7", true, kUnitLimit,
       [&] { return unit_conditional(solver, jobs); }},
      {"8", "unit distance classification, n<=10", true, kClassifyLimit,
       [&] { return classification(solver, 1, 10, jobs); }},
      {"8x", "unit distance classification, n=11..12 (extended)", false, kClassifyLimit,
       [&] { return classification(solver, 11, 12, jobs); }},
      {"9", "property suites", true, kPropertyLimit, [&] { return properties(solver); }},
      {"10", "symmetry of information fails", true, kSymmetryLimit,
       [&] { return symmetry_of_information(solver); }},
      {"11", "mode drift, sampled (non-gating)", false, 0,
       [&] { return mode_drift(solver, jobs); }},
  };

  bool unexpected = false;
  std::size_t passed = 0;
  for (const auto& c : criteria) {
    Timer t;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    const double secs = t.seconds();
    if (c.limit > 0 && secs > c.limit) {
      o.pass = false;
      o.detail += "; exceeded " + fmt(c.limit, 0) + "s";
    }
    const int numeric = std::atoi(c.id.c_str());
    const auto known = kKnownUnattainable.find(numeric);
    const bool expected_fail = c.gating && known != kKnownUnattainable.end();
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.title << "; "
              << o.detail << " [" << fmt(secs, 2) << "s]";
    if (!c.gating) std::cout << " (non-gating)";
    if (expected_fail && !o.pass) std::cout << " (known unattainable: " << known->second << ")";
    std::cout << std::endl;
    passed += o.pass;
    if (c.gating && !o.pass && !expected_fail) unexpected = true;
  }
  std::cout << passed << "/" << criteria.size() << " criteria passed" << std::endl;
  return unexpected ? 1 : 0;
}
