// Command-line front end: exit code 0 on success, 1 when a requested check
// finds a violation or inequality, 2 on input errors.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>

#include "doodle/census.hpp"
#include "doodle/invariant.hpp"
#include "doodle/moves.hpp"
#include "doodle/quiver.hpp"
#include "doodle/render_svg.hpp"
#include "doodle/tangle.hpp"

namespace {

using namespace doodle;

constexpr int kMaxInvariantChords = 16;

Field parse_field(const std::string& s) {
  if (s == "Q") return Field::Q;
  if (s == "F2") return Field::F2;
  throw CLI::ValidationError("--field", "must be Q or F2");
}

void check_invariant_size(const ArrowDiagram& d) {
  if (d.size() > kMaxInvariantChords) {
    throw std::invalid_argument(
        "diagram has " + std::to_string(d.size()) + " chords; exact invariants are "
        "supported up to " + std::to_string(kMaxInvariantChords) +
        " (subset counts double per chord)");
  }
}

int run_selftest(unsigned seed) {
  std::mt19937 rng(seed);
  int failures = 0;
  auto report = [&](const char* name, bool ok) {
    std::cout << (ok ? "PASS " : "FAIL ") << name << '\n';
    failures += !ok;
  };

  {
    bool ok = true;
    for (int i = 0; i < 300 && ok; ++i) {
      ArrowDiagram base = random_arrow_diagram(rng, 1 + i % 4);
      auto [walked, trace] = random_walk(base, rng, {10, 9});
      ok = diagram_invariant<Rational>(base, 5).value ==
           diagram_invariant<Rational>(walked, 5).value;
    }
    report("move invariance (300 random walks, n=5)", ok);
  }
  {
    bool ok = true;
    for (int i = 0; i < 500 && ok; ++i) {
      ArrowDiagram d = random_arrow_diagram(rng, 2 + i % 7);
      std::mt19937 r1(rng()), r2(rng());
      ok = minimize_with(d, r1).first == minimize_with(d, r2).first;
    }
    report("minimization confluence (500 random diagrams)", ok);
  }
  {
    bool ok = true;
    for (int i = 0; i < 500 && ok; ++i) {
      ArrowDiagram d = random_realizable_diagram(rng, 2 + i % 6);
      ok = is_realizable(d) && is_realizable(minimize(d).first);
    }
    report("realizability of move-generated diagrams (500)", ok);
  }
  {
    bool ok = true;
    for (int i = 0; i < 200 && ok; ++i) {
      ArrowDiagram d = random_arrow_diagram(rng, 1 + i % 5);
      auto big = diagram_invariant<Rational>(d, 4);
      auto small = diagram_invariant<Rational>(d, 3);
      ok = big.value.truncated(3) == small.value;
    }
    report("truncation compatibility (200)", ok);
  }
  {
    bool ok = true;
    for (int i = 0; i < 200 && ok; ++i) {
      ArrowDiagram d = random_arrow_diagram(rng, 1 + i % 5);
      ok = reduce_mod2(diagram_invariant<Rational>(d, 4).value) ==
           diagram_invariant<GF2>(d, 4).value;
    }
    report("F2 invariants equal exact invariants mod 2 (200)", ok);
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Arrow-diagram calculus for doodles: canonical forms, moves, "
               "subdiagram-sum invariants, census and verification"};
  app.require_subcommand(1);

  std::string code, code2, out_path, census_dir, field_str = "Q";
  int degree = 3, kmax = 3, n_extra = 1, jobs = 0, star_k = 3;
  unsigned seed = 20240127;
  bool force = false, trace = false;

  auto* canon = app.add_subcommand("canon", "Print the canonical Gauss code");
  canon->add_option("code", code, "Gauss code, e.g. \"1t 2t 1h 2h\"")->required();

  auto* mini = app.add_subcommand("minimize", "Reduce to the minimal diagram");
  mini->add_option("code", code)->required();
  mini->add_flag("--trace", trace, "Print the applied deleting moves");

  auto* real = app.add_subcommand("realizable", "Test realizability (exit 1 if not)");
  real->add_option("code", code)->required();

  auto* inv = app.add_subcommand("invariant", "Compute the subdiagram-sum invariant");
  inv->add_option("code", code)->required();
  inv->add_option("--degree", degree, "Truncation degree n")->required();
  inv->add_option("--field", field_str, "Q or F2")->capture_default_str();
  inv->add_option("--jobs", jobs, "Worker threads (default: DOODLE_WORKERS or all cores)");

  auto* cmp = app.add_subcommand("compare", "Compare two invariants (exit 1 if different)");
  cmp->add_option("code", code)->required();
  cmp->add_option("code2", code2)->required();
  cmp->add_option("--degree", degree)->required();
  cmp->add_option("--field", field_str)->capture_default_str();

  auto* cen = app.add_subcommand("census", "Build the doodle census");
  cen->add_option("--kmax", kmax)->required();
  cen->add_option("--n-extra", n_extra)->capture_default_str();
  cen->add_option("--field", field_str)->capture_default_str();
  cen->add_option("--out", out_path, "Directory for census.txt and invariant sidecars");
  cen->add_flag("--force", force, "Allow kmax beyond the growth guard");
  cen->add_option("--jobs", jobs);

  auto* ver = app.add_subcommand("verify", "Check the census against the completeness claims");
  ver->add_option("--census", census_dir, "Read a previously written census");
  ver->add_option("--kmax", kmax, "Or build one in memory")->capture_default_str();
  ver->add_option("--field", field_str)->capture_default_str();
  ver->add_option("--jobs", jobs);
  ver->add_flag("--force", force);

  auto* ren = app.add_subcommand("render", "Render a diagram");
  bool svg = false;
  ren->add_flag("--svg", svg, "SVG output (the only format)");
  ren->add_option("code", code)->required();
  ren->add_option("-o,--out", out_path, "Output file (default: stdout)");

  auto* res = app.add_subcommand("resolve", "Resolve a k-fold singular star tangle");
  res->add_option("--k", star_k, "Branches of the singular point (3..6)")->required();

  auto* self = app.add_subcommand("selftest", "Seeded randomized property checks");
  self->add_option("--seed", seed)->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (canon->parsed()) {
      std::cout << serialize(parse_gauss(code)) << '\n';
      return 0;
    }
    if (mini->parsed()) {
      auto [m, tr] = minimize(parse_gauss(code));
      if (trace) {
        for (const MoveStep& s : tr.steps) {
          const auto& del = std::get<DeleteStep>(s);
          if (del.site.kind == MoveKind::R1) {
            std::cout << "delete R1 chord " << del.site.chord_a + 1 << '\n';
          } else {
            std::cout << "delete R2 pair {" << del.site.chord_a + 1 << ","
                      << del.site.chord_b + 1 << "}\n";
          }
        }
      }
      std::cout << serialize(m) << '\n';
      return 0;
    }
    if (real->parsed()) {
      bool ok = is_realizable(parse_gauss(code));
      std::cout << (ok ? "true" : "false") << '\n';
      return ok ? 0 : 1;
    }
    if (inv->parsed()) {
      ArrowDiagram d = parse_gauss(code);
      check_invariant_size(d);
      InvariantOptions opt;
      opt.threads = jobs > 0 ? jobs : default_workers();
      if (parse_field(field_str) == Field::Q) {
        std::cout << diagram_invariant<Rational>(d, degree, opt).str();
      } else {
        std::cout << diagram_invariant<GF2>(d, degree, opt).str();
      }
      return 0;
    }
    if (cmp->parsed()) {
      ArrowDiagram d1 = parse_gauss(code), d2 = parse_gauss(code2);
      check_invariant_size(d1);
      check_invariant_size(d2);
      bool differ = parse_field(field_str) == Field::Q
                        ? distinguishes<Rational>(d1, d2, degree)
                        : distinguishes<GF2>(d1, d2, degree);
      std::cout << (differ ? "different" : "equal") << '\n';
      return differ ? 1 : 0;
    }
    if (cen->parsed()) {
      CensusOptions opt;
      opt.kmax = kmax;
      opt.n_extra = n_extra;
      opt.field = parse_field(field_str);
      opt.force = force;
      opt.workers = jobs;
      if (!out_path.empty()) opt.out = out_path;
      auto records = build_census(opt);
      for (const CensusRecord& r : records) {
        std::cout << "class=" << r.class_id << " crossings=" << r.crossings
                  << " code=\"" << serialize(r.minimal) << "\" reps=" << r.representatives
                  << '\n';
      }
      return 0;
    }
    if (ver->parsed()) {
      std::vector<CensusRecord> records;
      Field field = parse_field(field_str);
      if (!census_dir.empty()) {
        records = read_census(census_dir);
        int recorded = read_census_kmax(census_dir);
        if (recorded >= 0) {
          kmax = recorded;
        } else {
          for (const auto& r : records) kmax = std::max(kmax, r.crossings);
        }
      } else {
        CensusOptions opt;
        opt.kmax = kmax;
        opt.field = field;
        opt.force = force;
        opt.workers = jobs;
        records = build_census(opt);
      }
      TheoremReport rep = verify_theorems(records, kmax, field, jobs);
      std::cout << rep.json << '\n';
      return rep.pass ? 0 : 1;
    }
    if (ren->parsed()) {
      if (!svg) throw std::invalid_argument("render: pass --svg to select the output format");
      std::string doc = render_svg(parse_gauss(code));
      if (out_path.empty()) {
        std::cout << doc;
      } else {
        std::ofstream f(out_path, std::ios::trunc);
        if (!f) throw std::invalid_argument("cannot open output file " + out_path);
        f << doc;
      }
      return 0;
    }
    if (res->parsed()) {
      if (star_k < 3) throw std::invalid_argument("resolve: k must be at least 3");
      if (star_k > 6)
        throw std::invalid_argument(
            "resolve: k > 6 unsupported; the resolution has 2^(k-2) terms of "
            "k(k-1)/2 chords and the subdiagram sums double per chord");
      auto terms = complete_resolution(star_tangle(star_k));
      for (const ResolutionTerm& t : terms) {
        std::cout << (t.sign > 0 ? "+1" : "-1") << '\n' << t.diagram.str() << "\n\n";
      }
      auto deg = min_chord_degree(signed_subdiagram_sum(terms));
      std::cout << "min_chord_degree=";
      if (deg) {
        std::cout << *deg << '\n';
      } else {
        std::cout << "inf\n";
      }
      return 0;
    }
    if (self->parsed()) return run_selftest(seed);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
