// Copyright 2026 The Abstraqt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>

#include "abstraqt/bench_gen.hpp"
#include "abstraqt/oracle.hpp"
#include "abstraqt/simulator.hpp"
#include "cli.hpp"
#include "fuzz.hpp"
#include "support.hpp"

using namespace abstraqt;
using namespace abstraqt::testing_support;

namespace {

constexpr double kPi = std::numbers::pi;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Verdict {
    bool pass = true;
    std::ostringstream detail;

    void fail(const std::string &why) {
        if (pass) {
            detail.str("");
        }
        pass = false;
        detail << why << "; ";
    }
};

Circuit golden() {
    return parse_circuit("qreg q[2]; h q[0]; h q[1]; t q[1]; cx q[0],q[1]; cx q[0],q[1];");
}

void golden_example(Verdict &v) {
    auto start = Clock::now();
    const auto &d = std::get<PauliSumDecomposition>(builtin_action(Gate::unitary("t", {1})));
    if (d.terms.size() != 2) {
        v.fail("T decomposes into " + std::to_string(d.terms.size()) + " terms");
        return;
    }
    auto round1 = [](double x) { return std::round(x * 10) / 10; };
    std::complex<double> d1 = d.terms[0].coefficient;
    std::complex<double> d2 = d.terms[1].coefficient;
    if (round1(std::log(std::abs(d1))) != -0.1 || round1(std::arg(d1)) != 0.4) {
        v.fail("d1 off");
    }
    if (round1(std::log(std::abs(d2))) != -1.0 || round1(std::arg(d2)) != -1.2) {
        v.fail("d2 off");
    }

    AbstractSimulator sim(2);
    Circuit c = golden();
    for (std::size_t i = 0; i < 3; ++i) {
        sim.apply(c.gates[i]);
    }
    const AbstractComplex &chat = sim.merged().coeff;
    double ln_sin2 = std::log(std::pow(std::sin(kPi / 8), 2));
    double ln_cos2 = std::log(std::pow(std::cos(kPi / 8), 2));
    if (std::abs(chat.log_mag.lo - ln_sin2) > 1e-6 || std::abs(chat.log_mag.hi - ln_cos2) > 1e-6 ||
        std::abs(chat.phase.lo + kPi / 2) > 1e-6 || std::abs(chat.phase.hi - kPi / 2) > 1e-6) {
        v.fail("merged coefficient " + chat.str());
    }
    for (std::size_t i = 3; i < c.gates.size(); ++i) {
        sim.apply(c.gates[i]);
    }
    Interval minus = sim.projected_trace(ConcretePauli::from_string("-XI"));
    if (!(minus.lo == 0.0 && minus.hi == 0.0)) {
        v.fail("M- weight " + minus.str());
    }
    Interval zero = sim.projected_trace(ConcretePauli::from_string("IZ"));
    if (std::abs(zero.lo) > 0.01 || std::abs(zero.hi - 1.7071) > 0.01) {
        v.fail("M0 weight " + zero.str());
    }
    double t = seconds_since(start);
    if (t >= 1.0) {
        v.fail("took " + std::to_string(t) + " s");
    }
    if (v.pass) {
        v.detail << "M- " << minus.str() << ", M0 " << zero.str() << ", c " << chat.str();
    }
}

void family_proofs(Verdict &v) {
    double worst_time = 0;
    long peak_rss = 0;
    int runs = 0;
    for (BenchFamily f : all_families()) {
        for (std::uint64_t seed = 1; seed <= 3; ++seed) {
            Circuit c = generate(BenchSpec{f, 16, 500, seed, 20});
            cli::SimulateOptions options;
            options.check_zero = {15};
            cli::RunReport report = cli::simulate(c, options);
            ++runs;
            worst_time = std::max(worst_time, report.wall_seconds);
            peak_rss = std::max(peak_rss, report.peak_rss_kib);
            std::string tag = std::string(family_name(f)) + " seed " + std::to_string(seed);
            if (report.queries.empty() || report.queries[0].verdict != cli::Verdict::Proved) {
                v.fail(tag + " not proved " + report.queries.at(0).raw.str());
            }
            if (report.wall_seconds >= 10.0) {
                v.fail(tag + " took " + std::to_string(report.wall_seconds) + " s");
            }
            if (report.peak_rss_kib >= 600L * 1024) {
                v.fail(tag + " used " + std::to_string(report.peak_rss_kib) + " KiB");
            }
        }
    }
    if (v.pass) {
        v.detail << runs << " runs proved, slowest " << worst_time << " s, peak rss " << peak_rss / 1024 << " MiB";
    }
}

void clifford_exactness(Verdict &v) {
    Rng rng(2026);
    double widest = 0;
    double worst_gap = 0;
    for (int iter = 0; iter < 20; ++iter) {
        const std::size_t n = 20;
        AbstractSimulator sim(n);
        ConcreteSumState oracle(n);
        for (int i = 0; i < 2000; ++i) {
            Gate g = random_clifford_gate(rng, n);
            sim.apply(g);
            oracle.apply(g);
        }
        for (std::size_t q = 0; q < n; ++q) {
            Interval p = sim.probability_one(q);
            double want = oracle.probability_one(q);
            widest = std::max(widest, p.width());
            double gap = std::max(std::abs(p.lo - want), std::abs(p.hi - want));
            worst_gap = std::max(worst_gap, gap);
            if (p.width() > 1e-9 || gap > 1e-9) {
                v.fail("circuit " + std::to_string(iter) + " q" + std::to_string(q) + " " + p.str() + " vs " +
                       std::to_string(want));
            }
        }
    }
    if (v.pass) {
        v.detail << "max width " << widest << ", max oracle gap " << worst_gap;
    }
}

void oracle_equivalence(Verdict &v) {
    Rng rng(4242);
    double worst = 0;
    int contained = 0;
    for (int iter = 0; iter < 200; ++iter) {
        std::size_t n = 1 + below(rng, 4);
        std::size_t gates = 1 + below(rng, 25);
        std::size_t budget = below(rng, 5);
        DenseState dense(n);
        ConcreteSumState sum(n);
        AbstractSimulator sim(n);
        Circuit c{n, {}};
        for (std::size_t i = 0; i < gates; ++i) {
            bool non_clifford = budget > 0 && below(rng, 3) == 0;
            Gate g = non_clifford ? random_non_clifford_gate(rng, n) : random_clifford_gate(rng, n);
            budget -= non_clifford ? 1 : 0;
            c.gates.push_back(g);
            dense.apply(g);
            sum.apply(g);
            sim.apply(g);
            double err = max_abs(sum.to_dense() - dense.rho());
            worst = std::max(worst, err);
            if (err > 1e-8) {
                v.fail("circuit " + std::to_string(iter) + " step " + std::to_string(i) + " error " +
                       std::to_string(err));
                break;
            }
        }
        ConcretePauli r = random_hermitian_pauli(rng, n);
        if (r.bare() == ConcretePauli(n)) {
            r = ConcretePauli::single(n, 0, PauliLetter::Z);
        }
        Interval t = sim.trace();
        Interval pt = sim.projected_trace(r);
        DenseState projected = dense;
        projected.project(r);
        bool ok = t.lo - 1e-9 <= dense.trace() && dense.trace() <= t.hi + 1e-9 &&
                  pt.lo - 1e-9 <= projected.trace() && projected.trace() <= pt.hi + 1e-9;
        contained += ok ? 1 : 0;
        if (!ok) {
            v.fail("circuit " + std::to_string(iter) + " trace " + t.str() + " / " + pt.str() + ": " +
                   emit_circuit(c));
        }
    }
    if (v.pass) {
        v.detail << "200 circuits, max dense/sum error " << worst << ", traces contained " << contained << "/200";
    }
}

void soundness_fuzz(Verdict &v) {
    int total = 0;
    auto results = run_soundness_fuzz(7, 1000);
    for (const auto &r : results) {
        total += r.samples;
        if (r.samples < 1000 || r.violations > 0) {
            v.fail(r.transformer + ": " + std::to_string(r.violations) + " violations (" + r.first_failure + ")");
        }
    }
    if (v.pass) {
        v.detail << results.size() << " transformers, " << total << " samples, 0 violations";
    }
}

std::size_t footprint(const AbstractDensityMatrix &rho) {
    std::size_t letters = rho.pauli.num_qubits() + rho.signs.size();
    for (const auto &q : rho.stabilizers) {
        letters += q.num_qubits();
    }
    return letters;
}

void ghz_join(Verdict &v) {
    for (std::size_t n : {8u, 16u, 32u}) {
        Circuit c = generate(BenchSpec{BenchFamily::MeasureGhz, n, 1, 1, 20});
        AbstractSimulator sim(n);
        std::size_t measures = 0;
        std::size_t peak = 0;
        for (const auto &g : c.gates) {
            sim.apply(g);
            peak = std::max(peak, sim.stats().peak_summands);
            if (g.kind == GateKind::MeasureBoth) {
                ++measures;
                if (sim.summands().size() != 1) {
                    v.fail("n=" + std::to_string(n) + " " + std::to_string(sim.summands().size()) +
                           " summands after measure " + std::to_string(measures));
                }
                std::size_t size = footprint(sim.summands()[0]);
                if (size > n * n + 2 * n) {
                    v.fail("n=" + std::to_string(n) + " state holds " + std::to_string(size) + " entries");
                }
            }
        }
        Interval p = sim.probability_one(n - 1);
        if (measures != 20 || !(p.hi <= 0.0) || peak != 1) {
            v.fail("n=" + std::to_string(n) + " measures " + std::to_string(measures) + " final " + p.str());
        }
    }
    if (v.pass) {
        v.detail << "n=8,16,32: 20 rounds, one summand throughout, n^2+2n entries, last qubit proved";
    }
}

}  // namespace

int main() {
    struct Criterion {
        const char *name;
        void (*run)(Verdict &);
    };
    const Criterion criteria[] = {
        {"1 golden two-qubit example", golden_example},
        {"2 benchmark families proved at 16 qubits", family_proofs},
        {"3 Clifford exactness at 20 qubits", clifford_exactness},
        {"4 oracle equivalence on 200 random circuits", oracle_equivalence},
        {"5 soundness fuzz over all transformers", soundness_fuzz},
        {"6 measure-ghz stays one summand", ghz_join},
    };
    int failures = 0;
    for (const auto &c : criteria) {
        Verdict v;
        auto start = Clock::now();
        try {
            c.run(v);
        } catch (const std::exception &e) {
            v.fail(std::string("exception: ") + e.what());
        }
        std::printf("%s criterion %s (%.2f s): %s\n", v.pass ? "PASS" : "FAIL", c.name, seconds_since(start),
                    v.detail.str().c_str());
        failures += v.pass ? 0 : 1;
    }
    std::fflush(stdout);
    return failures == 0 ? 0 : 1;
}
