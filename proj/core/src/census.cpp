#include "doodle/census.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "doodle/invariant.hpp"
#include "doodle/moves.hpp"
#include "doodle/quiver.hpp"

namespace doodle {

int default_workers() {
  if (const char* env = std::getenv("DOODLE_WORKERS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

namespace {

template <class Fn>
void parallel_over(int count, int workers, Fn fn) {
  workers = std::max(1, std::min(workers, count));
  if (workers == 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        int i = next.fetch_add(1);
        if (i >= count) return;
        fn(i);
      }
    });
  }
  for (auto& t : pool) t.join();
}

std::string invariant_text(const ArrowDiagram& d, int n, Field field) {
  if (field == Field::Q) return diagram_invariant<Rational>(d, n).value.str();
  return diagram_invariant<GF2>(d, n).value.str();
}

std::string full_invariant_text(const ArrowDiagram& d, int n, Field field) {
  if (field == Field::Q) return diagram_invariant<Rational>(d, n).str();
  return diagram_invariant<GF2>(d, n).str();
}

}  // namespace

std::vector<CensusRecord> build_census(const CensusOptions& opt) {
  if (opt.kmax < 0) throw std::invalid_argument("kmax must be non-negative");
  if (opt.kmax > kEnumerationGuard && !opt.force) {
    std::ostringstream os;
    os << "census with kmax=" << opt.kmax << " exceeds the guard (kmax="
       << kEnumerationGuard << "); diagram counts grow like (2k-1)!!*2^k"
       << " (k=7 alone has 135135*128 sequences); pass force to override";
    throw std::invalid_argument(os.str());
  }
  int workers = opt.workers > 0 ? opt.workers : default_workers();

  std::ofstream progress;
  if (opt.out) {
    std::filesystem::create_directories(*opt.out);
    progress.open(*opt.out / "census.partial.txt", std::ios::trunc);
  }

  // Minimal form -> representative count.
  std::map<ArrowDiagram, long long> classes;
  for (int k = 0; k <= opt.kmax; ++k) {
    auto all = enumerate_arrow_diagrams(k);
    long long realizable = 0;
    for (const ArrowDiagram& d : all) {
      if (!is_realizable(d)) continue;
      ++realizable;
      classes[minimize(d).first] += 1;
    }
    if (progress.is_open()) {
      progress << "# enumerated k=" << k << " diagrams=" << all.size()
               << " realizable=" << realizable << " classes_so_far=" << classes.size()
               << '\n';
      progress.flush();
    }
  }

  std::vector<CensusRecord> records;
  for (const auto& [minimal, reps] : classes) {
    CensusRecord r;
    r.minimal = minimal;
    r.crossings = minimal.size();
    r.representatives = reps;
    records.push_back(std::move(r));
  }
  std::sort(records.begin(), records.end(), [](const CensusRecord& a, const CensusRecord& b) {
    if (a.crossings != b.crossings) return a.crossings < b.crossings;
    return serialize(a.minimal) < serialize(b.minimal);
  });
  const int n = opt.kmax + opt.n_extra;
  parallel_over(static_cast<int>(records.size()), workers, [&](int i) {
    records[i].invariant_text = full_invariant_text(records[i].minimal, n, opt.field);
  });
  for (int i = 0; i < static_cast<int>(records.size()); ++i) records[i].class_id = i;

  if (opt.out) {
    write_census(*opt.out, records, opt.kmax);
    std::error_code ec;
    std::filesystem::remove(*opt.out / "census.partial.txt", ec);
  }
  return records;
}

void write_census(const std::filesystem::path& dir,
                  const std::vector<CensusRecord>& records, int kmax) {
  std::filesystem::create_directories(dir);
  std::ofstream idx(dir / "census.txt", std::ios::trunc);
  if (!idx) throw std::runtime_error("cannot write census index");
  idx << "# kmax=" << kmax << '\n';
  for (const CensusRecord& r : records) {
    std::ostringstream name;
    name << "invariant_" << r.class_id << ".txt";
    idx << "class=" << r.class_id << " crossings=" << r.crossings << " code=\""
        << serialize(r.minimal) << "\" reps=" << r.representatives
        << " invariant=" << name.str() << '\n';
    std::ofstream side(dir / name.str(), std::ios::trunc);
    side << r.invariant_text;
  }
}

int read_census_kmax(const std::filesystem::path& dir) {
  std::ifstream idx(dir / "census.txt");
  if (!idx) throw std::runtime_error("cannot read census index");
  std::string line;
  while (std::getline(idx, line)) {
    size_t p = line.find("# kmax=");
    if (p == 0) return std::stoi(line.substr(7));
  }
  return -1;
}

std::vector<CensusRecord> read_census(const std::filesystem::path& dir) {
  std::ifstream idx(dir / "census.txt");
  if (!idx) throw std::runtime_error("cannot read census index");
  std::vector<CensusRecord> records;
  std::string line;
  while (std::getline(idx, line)) {
    if (line.empty() || line[0] == '#') continue;
    CensusRecord r;
    auto field_after = [&](const std::string& tag) {
      size_t p = line.find(tag);
      if (p == std::string::npos)
        throw std::runtime_error("census index: missing " + tag);
      return p + tag.size();
    };
    r.class_id = std::stoi(line.substr(field_after("class=")));
    r.crossings = std::stoi(line.substr(field_after("crossings=")));
    size_t c0 = field_after("code=\"");
    size_t c1 = line.find('"', c0);
    r.minimal = parse_gauss(line.substr(c0, c1 - c0));
    r.representatives = std::stoll(line.substr(field_after("reps=")));
    std::string inv = line.substr(field_after("invariant="));
    std::ifstream side(dir / inv);
    if (!side) throw std::runtime_error("census: missing sidecar " + inv);
    std::ostringstream buf;
    buf << side.rdbuf();
    r.invariant_text = buf.str();
    records.push_back(std::move(r));
  }
  return records;
}

TheoremReport verify_theorems(const std::vector<CensusRecord>& census, int kmax,
                              Field field, int workers) {
  using nlohmann::json;
  if (workers <= 0) workers = default_workers();
  json checks = json::array();
  bool all_pass = true;

  // (a) Every nontrivial class is nontrivial at truncation = crossing count.
  {
    json failures = json::array();
    std::vector<std::string> fail(census.size());
    parallel_over(static_cast<int>(census.size()), workers, [&](int i) {
      const CensusRecord& r = census[i];
      if (r.crossings == 0) return;
      bool nt = field == Field::Q ? nontriviality<Rational>(r.minimal, r.crossings)
                                  : nontriviality<GF2>(r.minimal, r.crossings);
      if (!nt) fail[i] = serialize(r.minimal);
    });
    for (const auto& f : fail)
      if (!f.empty()) failures.push_back(f);
    bool pass = failures.empty();
    all_pass &= pass;
    checks.push_back({{"name", "nontriviality"}, {"pass", pass}, {"failures", failures}});
  }

  // (b) Pairwise distinct invariants at truncation kmax + 1.
  {
    json failures = json::array();
    std::vector<std::string> inv(census.size());
    parallel_over(static_cast<int>(census.size()), workers, [&](int i) {
      inv[i] = invariant_text(census[i].minimal, kmax + 1, field);
    });
    std::map<std::string, int> seen;
    for (int i = 0; i < static_cast<int>(census.size()); ++i) {
      auto [it, fresh] = seen.emplace(inv[i], i);
      if (!fresh) {
        failures.push_back({{"class_a", it->second}, {"class_b", i}});
      }
    }
    bool pass = failures.empty();
    all_pass &= pass;
    checks.push_back({{"name", "distinctness"}, {"pass", pass}, {"failures", failures}});
  }

  // (c) Leading coefficient 1 for every minimal representative.
  {
    json failures = json::array();
    std::vector<std::string> fail(census.size());
    parallel_over(static_cast<int>(census.size()), workers, [&](int i) {
      const CensusRecord& r = census[i];
      int n = std::max(r.crossings, 1);
      bool ok;
      if (field == Field::Q) {
        ok = leading_coefficient<Rational>(r.minimal, n) == Rational(1);
      } else {
        ok = leading_coefficient<GF2>(r.minimal, n) == GF2(1);
      }
      if (!ok) fail[i] = serialize(r.minimal);
    });
    for (const auto& f : fail)
      if (!f.empty()) failures.push_back(f);
    bool pass = failures.empty();
    all_pass &= pass;
    checks.push_back({{"name", "leading_coefficient"}, {"pass", pass}, {"failures", failures}});
  }

  json report = {
      {"kmax", kmax},
      {"field", field_label(field)},
      {"classes", census.size()},
      {"checks", checks},
      {"pass", all_pass},
  };
  return {all_pass, report.dump(2)};
}

}  // namespace doodle
