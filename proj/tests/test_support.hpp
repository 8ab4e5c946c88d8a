#pragma once

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "corep/group.hpp"
#include "corep/problem.hpp"
#include "corep/rep.hpp"

namespace testsupport {

using corep::CMatrix;
using corep::Complex;

inline CMatrix m1(Complex z) {
    CMatrix m(1, 1);
    m << z;
    return m;
}

inline CMatrix m2(Complex a, Complex b, Complex c, Complex d) {
    CMatrix m(2, 2);
    m << a, b, c, d;
    return m;
}

inline CMatrix pauli_x() { return m2(0, 1, 1, 0); }
inline CMatrix pauli_y() { return m2(0, Complex(0, -1), Complex(0, 1), 0); }
inline CMatrix pauli_z() { return m2(1, 0, 0, -1); }

/// Real 2x2 rotation by theta.
inline CMatrix rot2(double theta) {
    return m2(std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta));
}

/// Spin-1/2 rotation about z by theta: diag(exp(-i theta/2), exp(i theta/2)).
inline CMatrix spin_rz(double theta) {
    const Complex e = std::exp(Complex(0, -theta / 2.0));
    return m2(e, 0, 0, std::conj(e));
}

/// Spin-1/2 rotation about x by theta.
inline CMatrix spin_rx(double theta) {
    const double c = std::cos(theta / 2.0);
    const Complex s = Complex(0, -1) * std::sin(theta / 2.0);
    return m2(c, s, s, c);
}

/// Real 4x4 model of a complex 2x2 matrix M = X + iY as [[X, -Y], [Y, X]].
inline CMatrix realify(const CMatrix& m) {
    const Eigen::Index n = m.rows();
    CMatrix out = CMatrix::Zero(2 * n, 2 * n);
    out.topLeftCorner(n, n) = m.real().cast<Complex>();
    out.topRightCorner(n, n) = (-m.imag()).cast<Complex>();
    out.bottomLeftCorner(n, n) = m.imag().cast<Complex>();
    out.bottomRightCorner(n, n) = m.real().cast<Complex>();
    return out;
}

inline corep::GroupElement gen(const CMatrix& m, int index) {
    return corep::GroupElement{m, false, {index}};
}

inline corep::Irrep make_irrep(const std::string& label, std::vector<CMatrix> images) {
    corep::Irrep rep;
    rep.label = label;
    rep.dimension = images.empty() ? 1 : images.front().rows();
    rep.generator_images = std::move(images);
    return rep;
}

/// C4 as real rotations, extended by plain conjugation.
inline corep::MagneticGroup make_c4() {
    corep::MagneticGroup g;
    g.name = "c4_time_reversal";
    g.unitary_generators = {gen(rot2(M_PI / 2.0), 1)};
    g.generator_names = {"c4"};
    g.a0 = {corep::identity_matrix(2), true, {}};
    g.a0_name = "K";
    g.a0_squared_word = {};
    return g;
}

inline std::vector<corep::Irrep> c4_irreps() {
    return {make_irrep("A", {m1(1)}), make_irrep("B", {m1(-1)}),
            make_irrep("E1", {m1(Complex(0, 1))}), make_irrep("E2", {m1(Complex(0, -1))})};
}

/// C4v: fourfold rotation plus mirror, extended by plain conjugation.
inline corep::MagneticGroup make_c4v() {
    corep::MagneticGroup g;
    g.name = "c4v_time_reversal";
    g.unitary_generators = {gen(rot2(M_PI / 2.0), 1), gen(m2(1, 0, 0, -1), 2)};
    g.generator_names = {"c4", "m"};
    g.a0 = {corep::identity_matrix(2), true, {}};
    g.a0_name = "K";
    g.a0_squared_word = {};
    return g;
}

inline corep::Irrep c4v_e_irrep() {
    return make_irrep("E", {rot2(M_PI / 2.0), m2(1, 0, 0, -1)});
}

/// {E, Ebar} with time reversal squaring to Ebar.
inline corep::MagneticGroup make_double_group() {
    corep::MagneticGroup g;
    g.name = "double_group_kramers";
    g.unitary_generators = {gen(-corep::identity_matrix(2), 1)};
    g.generator_names = {"Ebar"};
    g.a0 = {m2(0, 1, -1, 0), true, {}};  // i * sigma_y
    g.a0_name = "Theta";
    g.a0_squared_word = {1};
    return g;
}

/// Sampled SU(2) through quarter turns about z and x; Theta^2 = rz^4 = -E.
inline corep::MagneticGroup make_su2(std::uint64_t seed = 42, std::size_t count = 64) {
    corep::MagneticGroup g;
    g.name = "su2_spin_half";
    g.kind = corep::GroupKind::Sampled;
    g.unitary_generators = {gen(spin_rz(M_PI / 2.0), 1), gen(spin_rx(M_PI / 2.0), 2)};
    g.generator_names = {"rz", "rx"};
    g.a0 = {m2(0, 1, -1, 0), true, {}};
    g.a0_name = "Theta";
    g.a0_squared_word = {1, 1, 1, 1};
    g.sampling = {count, 8, seed};
    return g;
}

inline corep::Irrep su2_spin_half_irrep() {
    return make_irrep("spin12", {spin_rz(M_PI / 2.0), spin_rx(M_PI / 2.0)});
}

/// Sampled SL(2,C): the group lives as real 4x4 models so conjugation K fixes
/// every element; the fundamental keeps the complex 2x2 images.
inline corep::MagneticGroup make_sl2c(std::uint64_t seed = 42, std::size_t count = 64) {
    corep::MagneticGroup g;
    g.name = "sl2c_fundamental";
    g.kind = corep::GroupKind::Sampled;
    const CMatrix u1 = m2(1, 1, 0, 1);
    const CMatrix u2 = m2(1, 0, 1, 1);
    const CMatrix w = m2(2, 0, 0, 0.5);
    const CMatrix v = m2(std::exp(Complex(0, M_PI / 4)), 0, 0, std::exp(Complex(0, -M_PI / 4)));
    g.unitary_generators = {gen(realify(u1), 1), gen(realify(u2), 2), gen(realify(w), 3),
                            gen(realify(v), 4)};
    g.generator_names = {"u1", "u2", "w", "v"};
    g.a0 = {corep::identity_matrix(4), true, {}};
    g.a0_name = "K";
    g.a0_squared_word = {};
    g.sampling = {count, 8, seed};
    return g;
}

inline corep::Irrep sl2c_fundamental_irrep() {
    return make_irrep(
        "fund", {m2(1, 1, 0, 1), m2(1, 0, 1, 1), m2(2, 0, 0, 0.5),
                 m2(std::exp(Complex(0, M_PI / 4)), 0, 0, std::exp(Complex(0, -M_PI / 4)))});
}

inline corep::Irrep trivial_irrep(std::size_t generator_count,
                                  const std::string& label = "triv") {
    std::vector<CMatrix> images(generator_count, m1(1));
    return make_irrep(label, std::move(images));
}

/// Seeded random complex matrix with entries in the unit square.
inline CMatrix random_matrix(Eigen::Index n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto unit = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    CMatrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            m(i, j) = Complex(2.0 * unit() - 1.0, 2.0 * unit() - 1.0);
    return m;
}

/// Seeded random invertible matrix near the identity.
inline CMatrix random_similarity(Eigen::Index n, std::uint64_t seed) {
    return corep::identity_matrix(n) + 0.3 * random_matrix(n, seed);
}

inline std::string fixture_path(const std::string& name) {
    return std::string(COREP_FIXTURE_DIR) + "/" + name;
}

}  // namespace testsupport
