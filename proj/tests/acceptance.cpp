// Copyright (c) 2026 The rotext authors
// SPDX-License-Identifier: Apache-2.0

// Release gate for the toolkit: ten self-contained checks, one line of
// output each. Run with --only N to rerun a single check.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "rotext/anchors.hpp"
#include "rotext/coding.hpp"
#include "rotext/errors.hpp"
#include "rotext/evalkit.hpp"
#include "rotext/geometry.hpp"
#include "rotext/losses.hpp"
#include "rotext/matching.hpp"
#include "rotext/postprocess.hpp"
#include "rotext/textio.hpp"
#include "support/oracles.hpp"

using namespace rotext;
using rotext::testing::central_diff;
using rotext::testing::mc_iou;
using rotext::testing::random_box;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Gate {
 public:
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      pass_ = false;
      if (first_failure_.empty()) first_failure_ = what;
    }
  }

  void note(const std::string& text) { note_ = text; }

  Outcome outcome() const {
    Outcome o;
    o.pass = pass_;
    o.detail = pass_ ? note_ : first_failure_;
    return o;
  }

 private:
  bool pass_ = true;
  std::string first_failure_;
  std::string note_;
};

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(3);
  s << v;
  return s.str();
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

bool close_rel(double got, double want, double tol) {
  return std::abs(got - want) <= tol * std::max(1.0, std::abs(want));
}

// 1. Polygon-clipping IoU against a stratified sampling oracle plus the
//    closed-form overlap cases, inside the runtime budget.
Outcome check_iou_oracle() {
  Gate g;
  const auto t0 = std::chrono::steady_clock::now();

  std::mt19937_64 rng(1001);
  double worst = 0.0;
  for (int pair = 0; pair < 1000; ++pair) {
    const RotatedBox a = random_box(rng, 0.0, 40.0, 2.0, 30.0);
    const RotatedBox b = random_box(rng, 0.0, 40.0, 2.0, 30.0);
    const double exact = rotated_iou(a, b);
    const double sampled = mc_iou(a, b, 1000, 77000 + pair);
    worst = std::max(worst, std::abs(exact - sampled));
  }
  g.expect(worst <= 1e-3, "sampling-oracle deviation " + fmt(worst));

  const double shifted =
      rotated_iou(RotatedBox(0, 0, 4, 2, 0), RotatedBox(1, 0, 4, 2, 0));
  g.expect(std::abs(shifted - 0.6) <= 1e-9,
           "unit-shift overlap " + fmt(shifted));

  const double pi = std::acos(-1.0);
  const double crossed =
      rotated_iou(RotatedBox(0, 0, 2, 2, 0), RotatedBox(0, 0, 2, 2, pi / 4));
  g.expect(std::abs(crossed - 1.0 / std::sqrt(2.0)) <= 1e-6,
           "crossed-squares overlap " + fmt(crossed));

  const double elapsed = seconds_since(t0);
  g.expect(elapsed < 60.0, "runtime " + fmt(elapsed) + " s");
  g.note("max dev " + fmt(worst) + ", " + fmt(elapsed) + " s");
  return g.outcome();
}

// 2. Decoding inverts encoding, angle component included.
Outcome check_code_inverse() {
  Gate g;
  const auto t0 = std::chrono::steady_clock::now();

  std::mt19937_64 rng(1002);
  double worst = 0.0;
  for (int pair = 0; pair < 10000; ++pair) {
    const RotatedBox a = random_box(rng, -500.0, 500.0, 0.5, 400.0);
    const RotatedBox want = random_box(rng, -500.0, 500.0, 0.5, 400.0);
    const RotatedBox got = decode(a, encode(a, want));

    const double errs[] = {std::abs(got.cx() - want.cx()),
                           std::abs(got.cy() - want.cy()),
                           std::abs(got.w() - want.w()),
                           std::abs(got.h() - want.h()),
                           std::abs(got.theta() - want.theta())};
    const double refs[] = {want.cx(), want.cy(), want.w(), want.h(),
                           want.theta()};
    for (int k = 0; k < 5; ++k) {
      const double rel = errs[k] / std::max(1.0, std::abs(refs[k]));
      worst = std::max(worst, rel);
    }
  }
  g.expect(worst <= 1e-9, "round-trip deviation " + fmt(worst));

  const double elapsed = seconds_since(t0);
  g.expect(elapsed < 5.0, "runtime " + fmt(elapsed) + " s");
  g.note("max rel dev " + fmt(worst) + ", " + fmt(elapsed) + " s");
  return g.outcome();
}

// 3. Shape refinement keeps every anchor center bit-exact and the count fixed.
Outcome check_refinement_alignment() {
  Gate g;
  std::mt19937_64 rng(1003);
  std::uniform_real_distribution<double> unif(-5.0, 5.0);

  std::size_t applied = 0;
  for (int set = 0; set < 100; ++set) {
    const std::size_t n = 50 + 50 * static_cast<std::size_t>(set % 5);
    std::vector<RotatedBox> anchors;
    std::vector<Delta3> deltas;
    for (std::size_t i = 0; i < n; ++i) {
      anchors.push_back(random_box(rng, -200.0, 200.0, 1.0, 120.0));
      deltas.push_back({unif(rng), unif(rng), unif(rng)});
    }
    const std::vector<RotatedBox> learned = apply_refinement(anchors, deltas);
    g.expect(learned.size() == anchors.size(), "anchor count changed");
    for (std::size_t i = 0; i < n && i < learned.size(); ++i) {
      g.expect(learned[i].cx() == anchors[i].cx() &&
                   learned[i].cy() == anchors[i].cy(),
               "center moved in set " + std::to_string(set));
    }
    applied += n;
  }
  g.note(std::to_string(applied) + " refinements, centers bit-exact");
  return g.outcome();
}

// 4. Classification loss arithmetic: cross-entropy limit, hand value, and
//    finite-difference agreement for both loss gradients.
Outcome check_loss_gradients() {
  Gate g;
  std::mt19937_64 rng(1004);

  const FocalParams ce{1.0, 0.0};
  std::uniform_real_distribution<double> prob(0.01, 0.99);
  for (int i = 0; i < 100; ++i) {
    const double p = prob(rng);
    const double got = focal_loss(std::vector<double>{p},
                                  std::vector<MatchLabel>{MatchLabel::positive},
                                  ce)
                           .value;
    g.expect(std::abs(got - -std::log(p)) <= 1e-12,
             "cross-entropy limit off at p=" + fmt(p));
  }

  const double hand = 0.25 * 0.01 * -std::log(0.9);  // alpha (1-p)^2 ce
  const double focal_at_09 =
      focal_loss(std::vector<double>{0.9},
                 std::vector<MatchLabel>{MatchLabel::positive}, {0.25, 2.0})
          .value;
  g.expect(std::abs(focal_at_09 - hand) <= 1e-8,
           "hand value " + fmt(focal_at_09) + " vs " + fmt(hand));

  std::uniform_real_distribution<double> mid(0.02, 0.98);
  double worst_focal = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double p = mid(rng);
    const MatchLabel label =
        i % 2 == 0 ? MatchLabel::positive : MatchLabel::negative;
    const double an = focal_loss(std::vector<double>{p},
                                 std::vector<MatchLabel>{label})
                          .grad[0];
    const double fd = central_diff(
        [&](double x) {
          return focal_loss(std::vector<double>{x},
                            std::vector<MatchLabel>{label})
              .value;
        },
        p, 1e-5);
    worst_focal = std::max(worst_focal,
                           std::abs(an - fd) / std::max(std::abs(fd), 1e-10));
  }
  g.expect(worst_focal < 1e-4, "focal gradient rel err " + fmt(worst_focal));

  std::uniform_real_distribution<double> diff(-3.0, 3.0);
  double worst_l1 = 0.0;
  for (int i = 0; i < 1000; ++i) {
    double x = diff(rng);
    if (std::abs(std::abs(x) - 1.0) < 1e-3) x += 0.01;  // off the kink
    if (std::abs(x) < 1e-4) x += 0.5;
    const double an = smooth_l1(std::vector<double>{x}, 1).grad[0];
    const double fd = central_diff(
        [](double v) { return smooth_l1(std::vector<double>{v}, 1).value; }, x,
        1e-5);
    worst_l1 =
        std::max(worst_l1, std::abs(an - fd) / std::max(std::abs(fd), 1e-10));
  }
  g.expect(worst_l1 < 1e-4, "smooth-l1 gradient rel err " + fmt(worst_l1));

  g.note("hand value dev " + fmt(std::abs(focal_at_09 - hand)) +
         ", grad rel errs " + fmt(worst_focal) + "/" + fmt(worst_l1));
  return g.outcome();
}

// 5. Shipped objective weights.
Outcome check_total_loss() {
  Gate g;
  const TotalLoss t = total_loss(1.0, 2.0, 3.0);
  g.expect(t.total == 4.5, "total " + fmt(t.total));
  const LossWeights w;
  g.expect(w.refinement == 0.5 && w.localization == 0.5 &&
               w.classification == 1.0,
           "default weights changed");
  g.note("total_loss(1,2,3) = " + fmt(t.total));
  return g.outcome();
}

// 6. Pyramid anchor counts on an 800-square image.
Outcome check_anchor_counts() {
  Gate g;
  const std::size_t single =
      generate_anchors(AnchorConfig::with_grid(1, 1), 800, 800).size();
  const std::size_t full =
      generate_anchors(AnchorConfig::with_grid(3, 5), 800, 800).size();
  g.expect(single == 13343, "single-shape count " + std::to_string(single));
  g.expect(full == 200145, "full-grid count " + std::to_string(full));
  g.note(std::to_string(single) + " and " + std::to_string(full) + " anchors");
  return g.outcome();
}

// 7. Greedy suppression invariants on seeded detection sets.
Outcome check_nms_invariants() {
  Gate g;
  std::mt19937_64 rng(1007);
  std::uniform_real_distribution<double> score(0.0, 1.0);
  const double taus[] = {0.2, 0.35, 0.5, 0.65, 0.8};

  for (int trial = 0; trial < 500; ++trial) {
    const int n = 20 + trial % 41;
    std::vector<Detection> dets;
    for (int i = 0; i < n; ++i) {
      dets.push_back({random_box(rng, 0.0, 100.0, 3.0, 25.0), score(rng)});
    }
    const double tau = taus[trial % 5];
    const auto kept = rotated_nms(dets, tau);

    bool sorted = true;
    for (std::size_t i = 1; i < kept.size(); ++i) {
      sorted = sorted && kept[i - 1].score >= kept[i].score;
    }
    g.expect(sorted, "output not score-sorted in trial " + std::to_string(trial));

    for (const auto& d : kept) {
      const bool member =
          std::any_of(dets.begin(), dets.end(), [&](const Detection& s) {
            return s.score == d.score && s.box.cx() == d.box.cx() &&
                   s.box.cy() == d.box.cy() && s.box.w() == d.box.w() &&
                   s.box.h() == d.box.h() && s.box.theta() == d.box.theta();
          });
      g.expect(member, "output is not a subset in trial " + std::to_string(trial));
    }

    for (std::size_t i = 0; i < kept.size(); ++i) {
      for (std::size_t j = i + 1; j < kept.size(); ++j) {
        g.expect(rotated_iou(kept[i].box, kept[j].box) < tau,
                 "kept pair above tau in trial " + std::to_string(trial));
      }
    }

    const auto again = rotated_nms(kept, tau);
    bool same = again.size() == kept.size();
    for (std::size_t i = 0; same && i < kept.size(); ++i) {
      same = again[i].score == kept[i].score &&
             again[i].box.cx() == kept[i].box.cx();
    }
    g.expect(same, "not idempotent in trial " + std::to_string(trial));

    const RotatedBox twin = random_box(rng, 0.0, 100.0, 3.0, 25.0);
    const std::vector<Detection> pair = {{twin, 0.3}, {twin, 0.7}};
    const auto collapsed = rotated_nms(pair, tau);
    g.expect(collapsed.size() == 1 && collapsed[0].score == 0.7,
             "coincident pair did not collapse in trial " +
                 std::to_string(trial));
  }
  g.note("500 seeded sets");
  return g.outcome();
}

// 8. Anchor coverage: monotone recall curves, richer grids reach further,
//    and shape-learned anchors cover everything at 0.5.
Outcome check_coverage() {
  Gate g;
  std::mt19937_64 rng(1008);

  std::vector<GroundTruth> gts;
  for (int i = 0; i < 1000; ++i) {
    gts.push_back({random_box(rng, 60.0, 740.0, 28.0, 110.0), false});
  }

  const AnchorGrid single = generate_anchors(AnchorConfig::with_grid(1, 1), 800, 800);
  const AnchorGrid full = generate_anchors(AnchorConfig::with_grid(3, 5), 800, 800);

  const auto dense = dense_thresholds();
  for (const AnchorGrid* grid : {&single, &full}) {
    const CoverageCurve c = coverage_curve(grid->boxes, gts, dense);
    for (std::size_t i = 1; i < c.recalls.size(); ++i) {
      g.expect(c.recalls[i] <= c.recalls[i - 1], "recall curve not monotone");
    }
  }

  const std::vector<double> at_half = {0.5};
  const double single_half =
      coverage_curve(single.boxes, gts, at_half).recalls[0];
  const double full_half = coverage_curve(full.boxes, gts, at_half).recalls[0];
  g.expect(single_half < full_half,
           "recall@0.5 " + fmt(single_half) + " !< " + fmt(full_half));

  // One finest-level anchor per instance, shape-learned toward it.
  std::vector<RotatedBox> base;
  std::vector<Delta3> deltas;
  for (const auto& gt : gts) {
    double best = 1e300;
    std::size_t best_i = 0;
    for (std::size_t i = 0; i < single.size(); ++i) {
      if (single.level_index[i] != 0) continue;
      const double dx = single.boxes[i].cx() - gt.box.cx();
      const double dy = single.boxes[i].cy() - gt.box.cy();
      if (dx * dx + dy * dy < best) {
        best = dx * dx + dy * dy;
        best_i = i;
      }
    }
    base.push_back(single.boxes[best_i]);
    deltas.push_back(encode_shape(single.boxes[best_i], gt.box));
  }
  const std::vector<RotatedBox> learned = apply_refinement(base, deltas);
  const CoverageCurve lc = coverage_curve(learned, gts, at_half);
  g.expect(lc.recalls[0] == 1.0, "learned recall@0.5 " + fmt(lc.recalls[0]));

  g.note("recall@0.5 " + fmt(single_half) + " < " + fmt(full_half) +
         ", learned 1");
  return g.outcome();
}

// 9. Evaluation protocol on hand-built scenes.
Outcome check_eval_scenes() {
  Gate g;
  const RotatedBox a(10, 10, 8, 4, 0.1);
  const RotatedBox b(40, 10, 8, 4, -0.2);

  {
    const std::vector<GroundTruth> gts = {{a, false}, {b, false}};
    const std::vector<Detection> dets = {{a, 0.9}, {b, 0.8}};
    const DetectionMatches m = match_detections(dets, gts, 0.5);
    const EvalResult r = prf(m.tp, m.fp, 2);
    g.expect(r.precision == 1.0 && r.recall == 1.0 && r.fmeasure == 1.0,
             "perfect scene " + fmt(r.precision) + "/" + fmt(r.recall) + "/" +
                 fmt(r.fmeasure));
  }
  {
    const std::vector<GroundTruth> gts = {{a, false}};
    const std::vector<Detection> dets = {{a, 0.9},
                                         {RotatedBox(200, 200, 8, 4, 0), 0.6}};
    const DetectionMatches m = match_detections(dets, gts, 0.5);
    const EvalResult r = prf(m.tp, m.fp, 1);
    g.expect(r.precision == 0.5 && r.recall == 1.0 && r.fmeasure == 2.0 / 3.0,
             "tp+fp scene " + fmt(r.precision) + "/" + fmt(r.recall) + "/" +
                 fmt(r.fmeasure));
  }
  {
    const std::vector<GroundTruth> gts = {{a, false}, {b, true}};
    const std::vector<Detection> with_ignored = {{a, 0.9}, {b, 0.8}};
    const std::vector<Detection> without = {{a, 0.9}};
    const DetectionMatches m1 = match_detections(with_ignored, gts, 0.5);
    const DetectionMatches m2 = match_detections(without, gts, 0.5);
    const EvalResult r1 = prf(m1.tp, m1.fp, 1);
    const EvalResult r2 = prf(m2.tp, m2.fp, 1);
    g.expect(m1.outcomes[1] == DetectionOutcome::discarded,
             "ignored-region detection not discarded");
    g.expect(r1.precision == r2.precision && r1.recall == r2.recall,
             "ignored-region detection moved the metrics");
  }
  g.note("three scenes exact");
  return g.outcome();
}

// 10. Annotation goldens parse to the documented boxes; malformed input
//     fails with a line number, never a crash.
Outcome check_parsers() {
  Gate g;

  {
    const auto gts = parse_icdar2013("38,43,920,215,Tiredness\n");
    g.expect(gts.size() == 1 && gts[0].box.cx() == 479.0 &&
                 gts[0].box.cy() == 129.0 && gts[0].box.w() == 882.0 &&
                 gts[0].box.h() == 172.0 && gts[0].box.theta() == 0.0 &&
                 !gts[0].ignore,
             "axis-aligned golden mismatch");
    g.expect(parse_icdar2013("0,0,10,5,###\n").at(0).ignore,
             "ignore marker golden mismatch");
  }
  {
    const auto gts = parse_icdar2015("0,0,10,0,10,5,0,5,hello\n");
    g.expect(gts.size() == 1 && std::abs(gts[0].box.cx() - 5.0) <= 1e-12 &&
                 std::abs(gts[0].box.cy() - 2.5) <= 1e-12 &&
                 std::abs(gts[0].box.w() - 10.0) <= 1e-12 &&
                 std::abs(gts[0].box.h() - 5.0) <= 1e-12 &&
                 std::abs(gts[0].box.theta()) <= 1e-12,
             "axis-aligned quad golden mismatch");
  }
  {
    const auto gts = parse_icdar2015("1,0,0,1,-1,0,0,-1,x\n");
    const double root2 = std::sqrt(2.0);
    const double quarter = std::acos(-1.0) / 4.0;
    g.expect(gts.size() == 1 && std::abs(gts[0].box.cx()) <= 1e-12 &&
                 std::abs(gts[0].box.cy()) <= 1e-12 &&
                 std::abs(gts[0].box.w() - root2) <= 1e-12 &&
                 std::abs(gts[0].box.h() - root2) <= 1e-12 &&
                 std::abs(gts[0].box.theta() + quarter) <= 1e-12,
             "diamond golden mismatch");
  }

  bool threw = false;
  try {
    parse_icdar2015("0,0,10,0,10,5,0,5,ok\n0,0,1,1,2,2,###\n");
  } catch (const ParseError& e) {
    threw = e.line() == 2 &&
            std::string(e.what()).find("line 2") != std::string::npos;
  } catch (...) {
  }
  g.expect(threw, "short quad line did not raise a line-numbered error");

  threw = false;
  try {
    parse_icdar2013("0,0,10,10,ok\nnonsense here\n");
  } catch (const ParseError& e) {
    threw = e.line() == 2;
  } catch (...) {
  }
  g.expect(threw, "malformed line did not raise a line-numbered error");

  threw = false;
  try {
    parse_icdar2013("9,9,3,12,shrunk\n");
  } catch (const DegenerateGeometryError& e) {
    threw = std::string(e.what()).find("line 1") != std::string::npos;
  } catch (...) {
  }
  g.expect(threw, "flipped box did not raise a degenerate-geometry error");

  g.expect(parse_icdar2013("").empty() && parse_icdar2015("").empty(),
           "empty input should parse to an empty list");

  g.note("three goldens exact, errors line-numbered");
  return g.outcome();
}

struct Entry {
  const char* name;
  Outcome (*fn)();
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  if (argc == 3 && std::string(argv[1]) == "--only") only = std::atoi(argv[2]);

  const std::vector<Entry> entries = {
      {"rotated IoU tracks the sampling oracle and closed forms",
       &check_iou_oracle},
      {"decode inverts encode on random box pairs", &check_code_inverse},
      {"shape refinement preserves centers and count",
       &check_refinement_alignment},
      {"classification and regression loss values and gradients",
       &check_loss_gradients},
      {"objective weights ship as documented", &check_total_loss},
      {"pyramid anchor counts on an 800-square image", &check_anchor_counts},
      {"greedy suppression invariants", &check_nms_invariants},
      {"anchor coverage and the shape-learning lift", &check_coverage},
      {"evaluation protocol on hand-built scenes", &check_eval_scenes},
      {"annotation goldens and line-numbered errors", &check_parsers},
  };

  int failures = 0;
  int ran = 0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (only != 0 && only != id) continue;
    ++ran;
    const Outcome o = entries[i].fn();
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << id << ". "
              << entries[i].name;
    if (!o.detail.empty()) std::cout << " (" << o.detail << ")";
    std::cout << "\n";
  }

  std::cout << (ran - failures) << "/" << ran << " checks passed\n";
  return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
