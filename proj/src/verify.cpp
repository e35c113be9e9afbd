#include "trinim/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <json.hpp>
#include <sstream>

#include "trinim/classifier.hpp"
#include "trinim/game.hpp"
#include "trinim/text.hpp"

namespace trinim {

std::size_t VerifyReport::total_mismatches() const {
  std::size_t n = 0;
  for (const auto& [name, counts] : checks) n += counts.mismatches;
  return n;
}

namespace {

constexpr std::array<TrianglePosition, 4> kMisereSmall = {
    TrianglePosition{1, 0, 0}, TrianglePosition{0, 1, 0}, TrianglePosition{0, 0, 1},
    TrianglePosition{1, 1, 1}};
constexpr std::array<TrianglePosition, 4> kNormalSmall = {
    TrianglePosition{0, 0, 0}, TrianglePosition{1, 1, 0}, TrianglePosition{1, 0, 1},
    TrianglePosition{0, 1, 1}};

struct Recorder {
  std::map<std::string, CheckCounts> checks;
  std::vector<std::pair<std::size_t, Mismatch>> mismatches;

  void check(const std::string& name, const TrianglePosition& p, bool ok,
             std::string expected = {}, std::string actual = {}) {
    auto& counts = checks[name];
    ++counts.checked;
    if (ok) return;
    ++counts.mismatches;
    mismatches.push_back({position_index(p), {p, name, std::move(expected), std::move(actual)}});
  }

  void merge(Recorder&& other) {
    for (auto& [name, counts] : other.checks) {
      checks[name].checked += counts.checked;
      checks[name].mismatches += counts.mismatches;
    }
    for (auto& m : other.mismatches) mismatches.push_back(std::move(m));
  }
};

std::string describe(Outcome o) { return std::string(outcome_name(o)); }

void check_move(Recorder& rec, const char* name, const TrianglePosition& p,
                const std::optional<TriangleMove>& move, const SolveTable& table) {
  const Outcome truth = table.outcome(p);
  if (!move) {
    rec.check(name, p, truth == Outcome::P || is_terminal(p), "a winning move", "none");
    return;
  }
  if (truth == Outcome::P) {
    rec.check(name, p, false, "no move from a P-position", format_move(*move));
    return;
  }
  if (!is_legal(p, *move)) {
    rec.check(name, p, false, "legal move", "illegal " + format_move(*move));
    return;
  }
  const auto next = apply_move(p, *move);
  rec.check(name, p, table.outcome(next) == Outcome::P, "lands on P",
            format_move(*move) + " lands on N " + format_position(next));
}

void check_closure(Recorder& rec, const TrianglePosition& p) {
  if (!in_normal_p_set(p)) return;
  for (const auto& m : legal_moves(p)) {
    const auto next = apply_move(p, m);
    if (in_normal_p_set(next)) {
      rec.check("normal-closure", p, false, "no option in the P-set",
                format_move(m) + " -> " + format_position(next));
      return;
    }
  }
  rec.check("normal-closure", p, true);
}

void check_position(Recorder& rec, const TrianglePosition& p, const SolveTable* normal,
                    const SolveTable* misere) {
  if (normal) {
    const Outcome truth = normal->outcome(p);
    const Outcome closed = normal_outcome(p);
    rec.check("normal-outcome", p, truth == closed, describe(truth), describe(closed));
    check_move(rec, "normal-move", p, winning_move_normal(p), *normal);
    check_closure(rec, p);
    const bool zero = normal->grundy(p) == 0;
    rec.check("grundy-zero", p, zero == in_normal_p_set(p),
              in_normal_p_set(p) ? "grundy 0" : "grundy > 0",
              "grundy " + std::to_string(normal->grundy(p)));
  }
  if (misere) {
    const Outcome truth = misere->outcome(p);
    const Outcome closed = misere_outcome(p);
    rec.check("misere-outcome", p, truth == closed, describe(truth), describe(closed));
    check_move(rec, "misere-move", p, winning_move_misere(p), *misere);
  }
}

}  // namespace

VerifyReport verify_theorems(Count bound, VerifyScope scope, const SolveOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  const bool do_normal = scope != VerifyScope::Misere;
  const bool do_misere = scope != VerifyScope::Normal;

  std::optional<SolveTable> normal;
  std::optional<SolveTable> misere;
  if (do_normal) {
    SolveOptions o = options;
    o.grundy = true;
    normal = solve_triangle(bound, Convention::Normal, o);
  }
  if (do_misere) {
    SolveOptions o = options;
    o.grundy = false;
    misere = solve_triangle(bound, Convention::Misere, o);
  }
  const SolveTable* normal_table = normal ? &*normal : nullptr;
  const SolveTable* misere_table = misere ? &*misere : nullptr;

  Recorder all;
  const std::int64_t levels = static_cast<std::int64_t>(bound) + 1;
#pragma omp parallel
  {
    Recorder local;
#pragma omp for schedule(dynamic, 1) nowait
    for (std::int64_t level = levels - 1; level >= 0; --level) {
      const Count n = static_cast<Count>(level);
      for (Count x = 0; x <= n; ++x) {
        for (Count y = 0; y <= n - x; ++y) {
          check_position(local, {x, y, n - x - y}, normal_table, misere_table);
        }
      }
    }
#pragma omp critical
    all.merge(std::move(local));
  }

  for (const auto& p : kMisereSmall) {
    if (!normal_table || !normal_table->contains(p)) continue;
    const auto g = normal_table->grundy(p);
    all.check("misere-small-grundy-one", p, g == 1, "grundy 1", "grundy " + std::to_string(g));
  }
  for (const auto& p : kNormalSmall) {
    if ((normal_table && !normal_table->contains(p)) || (misere_table && !misere_table->contains(p))) {
      continue;
    }
    bool ok = true;
    std::string actual;
    if (normal_table) {
      ok = ok && normal_table->outcome(p) == Outcome::P;
      actual += "normal " + describe(normal_table->outcome(p));
    }
    if (misere_table) {
      ok = ok && misere_table->outcome(p) == Outcome::N;
      actual += std::string(actual.empty() ? "" : ", ") + "misere " +
                describe(misere_table->outcome(p));
    }
    all.check("normal-small-flip", p, ok, "normal P, misere N", actual);
  }

  VerifyReport report;
  report.bound = bound;
  report.scope = scope;
  report.positions = position_count(bound);
  report.checks = std::move(all.checks);
  std::sort(all.mismatches.begin(), all.mismatches.end(), [](const auto& a, const auto& b) {
    return std::tie(a.second.check, a.first) < std::tie(b.second.check, b.first);
  });
  for (auto& [index, m] : all.mismatches) {
    if (report.mismatches.size() == VerifyReport::kMaxListedMismatches) break;
    report.mismatches.push_back(std::move(m));
  }
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

std::string format_report(const VerifyReport& report) {
  std::ostringstream out;
  out << "bound: " << report.bound << "\n";
  out << "positions: " << report.positions << "\n";
  out << "checks:\n";
  for (const auto& [name, counts] : report.checks) {
    out << "  " << name << ": " << counts.checked << " checked, " << counts.mismatches
        << " mismatches\n";
  }
  out << "mismatches: " << report.total_mismatches() << "\n";
  for (const auto& m : report.mismatches) {
    out << "  " << m.check << " at " << format_position(m.position) << ": expected "
        << m.expected << ", got " << m.actual << "\n";
  }
  return out.str();
}

std::string report_summary_json(const VerifyReport& report) {
  nlohmann::ordered_json j;
  j["bound"] = report.bound;
  j["scope"] = report.scope == VerifyScope::Both     ? "both"
               : report.scope == VerifyScope::Normal ? "normal"
                                                     : "misere";
  j["positions"] = report.positions;
  j["mismatch_count"] = report.total_mismatches();
  auto& checks = j["checks"] = nlohmann::ordered_json::object();
  for (const auto& [name, counts] : report.checks) {
    checks[name] = {{"checked", counts.checked}, {"mismatches", counts.mismatches}};
  }
  auto& list = j["mismatches"] = nlohmann::ordered_json::array();
  for (const auto& m : report.mismatches) {
    list.push_back({{"check", m.check},
                    {"position", {m.position.x, m.position.y, m.position.z}},
                    {"expected", m.expected},
                    {"actual", m.actual}});
  }
  return j.dump();
}

}  // namespace trinim
