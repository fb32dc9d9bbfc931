#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "qbsim/dynamics.hpp"
#include "qbsim/model.hpp"
#include "qbsim/observables.hpp"
#include "test_helpers.hpp"

using namespace qbsim;

namespace {

// Random mixed state: U diag(p) U^dag with p a random probability vector.
ComplexMatrix random_density(std::mt19937& rng) {
    std::exponential_distribution<double> expo(1.0);
    Eigen::Vector4d probs;
    for (int i = 0; i < 4; ++i) probs(i) = expo(rng);
    probs /= probs.sum();
    const ComplexMatrix u = test::random_unitary(rng, 4);
    return u * probs.asDiagonal().toDenseMatrix().cast<Complex>() *
           u.adjoint();
}

}  // namespace

TEST_CASE("ergotropy on reference states") {
    const ComplexMatrix h_free = build_free(ModelParams{});

    CHECK(ergotropy(density_matrix(initial_state()), h_free) == 0.0);

    StateVector up_up = StateVector::Zero(4);
    up_up(0) = 1.0;
    CHECK(ergotropy(density_matrix(up_up), h_free) ==
          doctest::Approx(4.0).epsilon(1e-12));

    // maximally mixed: already passive, nothing extractable
    CHECK(ergotropy(ComplexMatrix::Identity(4, 4) / 4.0, h_free) ==
          doctest::Approx(0.0).epsilon(1e-12));

    CHECK_THROWS_AS(ergotropy(ComplexMatrix::Identity(4, 4), h_free),
                    std::invalid_argument);
    ComplexMatrix not_hermitian = h_free;
    not_hermitian(0, 1) = Complex(0.0, 1.0);
    CHECK_THROWS_AS(
        ergotropy(density_matrix(initial_state()), not_hermitian),
        std::invalid_argument);
}

TEST_CASE("pure-state ergotropy equals mean energy minus ground energy") {
    // For pure states the passive state is the ground projector, so
    // zeta = <H0> - E_ground = <H0> + 2 omega0.
    const ComplexMatrix h_free = build_free(ModelParams{});
    std::mt19937 rng(1401);
    for (int trial = 0; trial < 1000; ++trial) {
        const StateVector psi = test::random_state(rng, 4);
        const ComplexMatrix rho = density_matrix(psi);
        const double mean = (psi.adjoint() * h_free * psi)(0).real();
        const double zeta = ergotropy(rho, h_free);
        CHECK(std::abs(zeta - (mean + 2.0)) <= 1e-10);
        CHECK(zeta >= 0.0);
        CHECK(zeta <= 4.0 + 1e-10);
    }
}

TEST_CASE("mixed-state ergotropy stays within the unitary extraction bounds") {
    const ComplexMatrix h_free = build_free(ModelParams{});
    std::mt19937 rng(1402);
    for (int trial = 0; trial < 200; ++trial) {
        const double zeta = ergotropy(random_density(rng), h_free);
        CHECK(zeta >= 0.0);
        CHECK(zeta <= 4.0 + 1e-10);
    }
}

TEST_CASE("power is ergotropy over elapsed time") {
    CHECK(power(2.0, 1.0) == 2.0);
    CHECK(power(1.5, 0.0) == 0.0);
    CHECK(power(parallel_ergotropy(M_PI / 4.0, 1.0, 1.0), M_PI / 4.0) ==
          doctest::Approx(8.0 / M_PI).epsilon(1e-12));
    CHECK_THROWS_AS(power(1.0, -0.5), std::invalid_argument);
}

TEST_CASE("single-cell first-order coherence") {
    CHECK(first_order_coherence_single(
              ComplexMatrix::Identity(2, 2) / 2.0) == 0.0);

    ComplexMatrix pure(2, 2);
    pure << 0.5, 0.5, 0.5, 0.5;
    CHECK(first_order_coherence_single(pure) ==
          doctest::Approx(1.0).epsilon(1e-12));

    ComplexMatrix diag = ComplexMatrix::Zero(2, 2);
    diag(0, 0) = 0.75;
    diag(1, 1) = 0.25;
    // 2 tr rho^2 - 1 = 2 (0.5625 + 0.0625) - 1 = 0.25
    CHECK(first_order_coherence_single(diag) ==
          doctest::Approx(0.5).epsilon(1e-12));

    CHECK_THROWS_AS(first_order_coherence_single(ComplexMatrix::Zero(2, 2)),
                    std::invalid_argument);
}

TEST_CASE("aggregate coherence on reference two-cell states") {
    CHECK(first_order_coherence(density_matrix(initial_state())) ==
          doctest::Approx(1.0).epsilon(1e-12));
    // Bell pair: both marginals maximally mixed
    CHECK(first_order_coherence(test::bell_phi_plus_density()) ==
          doctest::Approx(0.0).epsilon(1e-12));

    // pure |d> on A, maximally mixed on B: Q = sqrt((1 + 0)/2)
    ComplexMatrix rho = ComplexMatrix::Zero(4, 4);
    rho(2, 2) = 0.5;
    rho(3, 3) = 0.5;
    CHECK(first_order_coherence(rho) ==
          doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
}

TEST_CASE("coherence is 1 exactly for product pure states") {
    std::mt19937 rng(1403);
    for (int trial = 0; trial < 50; ++trial) {
        const StateVector a = test::random_state(rng, 2);
        const StateVector b = test::random_state(rng, 2);
        const ComplexMatrix rho = density_matrix(test::product_state(a, b));
        CHECK(std::abs(first_order_coherence(rho) - 1.0) <= 1e-9);
    }
    // while entanglement pushes it below 1
    CHECK(first_order_coherence(test::bell_phi_plus_density()) < 0.5);
}

TEST_CASE("correlation matrix on reference states") {
    const CorrelationMatrix t_down =
        correlation_matrix(density_matrix(initial_state()));
    CorrelationMatrix expected = CorrelationMatrix::Zero();
    expected(2, 2) = 1.0;
    CHECK((t_down - expected).cwiseAbs().maxCoeff() < 1e-12);

    const CorrelationMatrix t_bell =
        correlation_matrix(test::bell_phi_plus_density());
    expected.setZero();
    expected(0, 0) = 1.0;
    expected(1, 1) = -1.0;
    expected(2, 2) = 1.0;
    CHECK((t_bell - expected).cwiseAbs().maxCoeff() < 1e-12);

    const CorrelationMatrix t_mixed =
        correlation_matrix(ComplexMatrix::Identity(4, 4) / 4.0);
    CHECK(t_mixed.cwiseAbs().maxCoeff() < 1e-12);

    std::mt19937 rng(1404);
    for (int trial = 0; trial < 100; ++trial) {
        const CorrelationMatrix t =
            correlation_matrix(density_matrix(test::random_state(rng, 4)));
        CHECK(t.cwiseAbs().maxCoeff() <= 1.0 + 1e-12);
    }
}

TEST_CASE("steering on reference states") {
    CHECK(steering_max(CorrelationMatrix::Zero()) == 0.0);
    CHECK(steering_max(correlation_matrix(test::bell_phi_plus_density())) ==
          doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
    // every pure product state sits exactly at the steering threshold 1
    std::mt19937 rng(1405);
    for (int trial = 0; trial < 50; ++trial) {
        const StateVector a = test::random_state(rng, 2);
        const StateVector b = test::random_state(rng, 2);
        const CorrelationMatrix t =
            correlation_matrix(density_matrix(test::product_state(a, b)));
        CHECK(std::abs(steering_max(t) - 1.0) <= 1e-9);
    }
}

TEST_CASE("closed-form steering matches the brute-force maximizer") {
    std::mt19937 rng(1406);
    for (int trial = 0; trial < 200; ++trial) {
        const CorrelationMatrix t =
            correlation_matrix(density_matrix(test::random_state(rng, 4)));
        const double closed = steering_max(t);
        const double brute = steering_bruteforce(t, 8, 1e-7);
        CHECK(std::abs(closed - brute) <= 1e-6);
        // the maximizer can never beat the closed form
        CHECK(brute <= closed + 1e-9);
    }
}

TEST_CASE("steering and coherence are invariant under local unitaries") {
    std::mt19937 rng(1407);
    for (int trial = 0; trial < 50; ++trial) {
        const ComplexMatrix rho = density_matrix(test::random_state(rng, 4));
        const ComplexMatrix u =
            kron(test::random_unitary(rng, 2), test::random_unitary(rng, 2));
        const ComplexMatrix rotated = u * rho * u.adjoint();
        CHECK(std::abs(steering_max(correlation_matrix(rho)) -
                       steering_max(correlation_matrix(rotated))) <= 1e-9);
        CHECK(std::abs(first_order_coherence(rho) -
                       first_order_coherence(rotated)) <= 1e-9);
    }
}

TEST_CASE("record_trajectory fills every observable") {
    const HamiltonianSet set = build_all(ModelParams{}, ModelPreset::Custom);
    const TimeGrid grid{0.0, t_min(1.0), 51};
    const Trajectory traj = evolve(set.h_total, initial_state(), grid);
    const auto records = record_trajectory(traj, set.h_free);
    REQUIRE(records.size() == 51);

    // the uncharged battery: no ergotropy, unit coherence, threshold steering
    CHECK(records[0].t == 0.0);
    CHECK(records[0].ergotropy == 0.0);
    CHECK(records[0].power == 0.0);
    CHECK(records[0].coherence == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(records[0].steering == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(records[0].mean_energy == doctest::Approx(-2.0).epsilon(1e-12));

    for (const ObservableRecord& rec : records) {
        if (rec.t > 0.0) {
            CHECK(rec.power ==
                  doctest::Approx(rec.ergotropy / rec.t).epsilon(1e-12));
        }
        CHECK(rec.coherence >= 0.0);
        CHECK(rec.coherence <= 1.0);
        CHECK(rec.steering >= 0.0);
    }
}

TEST_CASE("find_peak locates maxima with parabolic refinement") {
    // boundary maximum: parallel charging peaks at the window edge
    {
        ModelParams p;
        p.J = 0.0;
        const HamiltonianSet set = build_all(p, ModelPreset::Custom);
        const Trajectory traj = evolve(set.h_total, initial_state(),
                                       TimeGrid{0.0, t_min(1.0), 201});
        const auto records = record_trajectory(traj, set.h_free);
        const PeakReport peak = find_peak(records, PeakKind::Ergotropy);
        CHECK(peak.t_peak == doctest::Approx(M_PI / 2.0).epsilon(1e-12));
        CHECK(peak.value_peak == doctest::Approx(4.0).epsilon(1e-10));
        CHECK(peak.kind == PeakKind::Ergotropy);
    }

    // interior maximum of an exact parabola is recovered exactly
    {
        std::vector<ObservableRecord> records;
        for (int k = 0; k <= 10; ++k) {
            ObservableRecord rec;
            rec.t = 0.1 * k;
            rec.ergotropy = 3.0 - 4.0 * (rec.t - 0.37) * (rec.t - 0.37);
            records.push_back(rec);
        }
        const PeakReport peak = find_peak(records, PeakKind::Ergotropy);
        CHECK(std::abs(peak.t_peak - 0.37) <= 1e-9);
        CHECK(std::abs(peak.value_peak - 3.0) <= 1e-9);
    }

    // strictly increasing series peaks at the last sample, unrefined
    {
        std::vector<ObservableRecord> records;
        for (int k = 0; k < 5; ++k) {
            ObservableRecord rec;
            rec.t = 0.5 * k;
            rec.power = static_cast<double>(k);
            records.push_back(rec);
        }
        const PeakReport peak = find_peak(records, PeakKind::Power);
        CHECK(peak.t_peak == 2.0);
        CHECK(peak.value_peak == 4.0);
        CHECK(peak.kind == PeakKind::Power);
    }

    // a flat series reports the earliest sample
    {
        std::vector<ObservableRecord> records;
        for (int k = 0; k < 4; ++k) {
            ObservableRecord rec;
            rec.t = 1.0 * k;
            rec.ergotropy = 2.5;
            records.push_back(rec);
        }
        const PeakReport peak = find_peak(records, PeakKind::Ergotropy);
        CHECK(peak.t_peak == 0.0);
        CHECK(peak.value_peak == 2.5);
    }

    CHECK_THROWS_AS(find_peak({}, PeakKind::Ergotropy), std::invalid_argument);
    CHECK_THROWS_AS(find_peak({ObservableRecord{}}, PeakKind::Power),
                    std::invalid_argument);
}

TEST_CASE("DM interaction trades steering for coherence in the XXZ chain") {
    // At matched times the D=1.7 trajectory is at least as coherent and no
    // more steerable than the D=0 trajectory (strict gap at the probes).
    ModelParams base;
    base.delta = 2.0;
    auto run = [&](double d) {
        ModelParams p = base;
        p.D = d;
        const HamiltonianSet set = build_all(p, ModelPreset::XXZ);
        const Trajectory traj = evolve(set.h_total, initial_state(),
                                       TimeGrid{0.0, t_min(1.0), 2001});
        return record_trajectory(traj, set.h_free);
    };
    const auto plain = run(0.0);
    const auto twisted = run(1.7);
    REQUIRE(plain.size() == twisted.size());

    const std::size_t probes[] = {600, 1000, 1400, 1800};
    for (const std::size_t k : probes) {
        CHECK(twisted[k].coherence > plain[k].coherence + 1e-9);
        CHECK(twisted[k].steering < plain[k].steering - 1e-9);
    }
}
