// Copyright 2026 The ccdecode Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ccdecode/hp.h"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace ccd {

namespace {

constexpr size_t kMaxGroupRank = 20;

void check_partition(const DopedCircuit &c, const Partition &part) {
    if (part.n != c.num_qubits()) {
        throw std::invalid_argument("Partition size does not match the circuit.");
    }
    if (part.d > kMaxEnumeratedD) {
        throw std::invalid_argument("|D| = " + std::to_string(part.d) + " is too large to enumerate P(D).");
    }
}

bool trivial_on_a(const F2Vec &v, size_t a) {
    for (size_t q = 0; q < a; q++) {
        if (v.x(q) || v.z(q)) {
            return false;
        }
    }
    return true;
}

RootTwo ratio(const RootTwo &v, uint64_t den) {
    return v / RootTwo(BigRational(BigInt(den)));
}

F2Basis group_basis(size_t n, const std::vector<PauliString> &gens, const Partition *part) {
    F2Basis basis(n);
    for (const auto &g : gens) {
        if (g.num_qubits() != n) {
            throw std::invalid_argument("Generator " + g.str() + " has the wrong number of qubits.");
        }
        if (part != nullptr) {
            for (size_t q = 0; q < part->d_offset(); q++) {
                if (g.vec.x(q) || g.vec.z(q)) {
                    throw std::invalid_argument("Generator " + g.str() + " is not supported on D.");
                }
            }
        }
        basis.insert(g.vec);
    }
    return basis;
}

}  // namespace

RootTwo trace_kernel(const PauliString &pa, const PauliSum &x, const PauliSum &y) {
    RootTwoSum acc;
    for (const PauliTerm &term : x.terms()) {
        Coeff other = y.coeff_of(term.vec);
        if (other.is_zero()) {
            continue;
        }
        acc.add_product(term.coeff, other, symplectic_form(pa.vec, term.vec) ? -1 : 1);
    }
    return acc.value();
}

std::vector<F2Vec> enumerate_group(const std::vector<PauliString> &gens) {
    if (gens.empty()) {
        throw std::invalid_argument("enumerate_group: no generators (the qubit count is unknown).");
    }
    const size_t n = gens[0].num_qubits();
    F2Basis basis(n);
    std::vector<F2Vec> independent;
    for (const auto &g : gens) {
        if (basis.insert(g.vec)) {
            independent.push_back(g.vec);
        }
    }
    if (independent.size() > kMaxGroupRank) {
        throw std::invalid_argument("enumerate_group: group has more than 2^20 elements.");
    }
    std::vector<F2Vec> out{F2Vec(n)};
    out.reserve(size_t{1} << independent.size());
    for (const F2Vec &g : independent) {
        const size_t half = out.size();
        for (size_t i = 0; i < half; i++) {
            out.push_back(out[i] ^ g);
        }
    }
    return out;
}

std::vector<PauliString> preserved_subgroup(const DopedCircuit &c, const Partition &part) {
    check_partition(c, part);
    std::vector<PauliString> out;
    for (uint64_t i = 0; i < (uint64_t{1} << (2 * part.d)); i++) {
        PauliString pd = local_pauli(part.n, part.d_offset(), part.d, i);
        if (check_preserved(pd, c)) {
            out.push_back(pd);
        }
    }
    return out;
}

RootTwo four_point_otoc(const DopedCircuit &c, const Partition &part) {
    check_partition(c, part);
    RootTwoSum acc;
    const uint64_t total = uint64_t{1} << (2 * part.d);
    for (uint64_t i = 0; i < total; i++) {
        PauliSum x = propagate_pauli(local_pauli(part.n, part.d_offset(), part.d, i), c);
        // Summing (-1)^{omega(P_A, p)} over P(A) leaves d_A^2 on strings trivial on A.
        for (const PauliTerm &term : x.terms()) {
            if (trivial_on_a(term.vec, part.a)) {
                acc.add_product(term.coeff, term.coeff);
            }
        }
    }
    return ratio(acc.value(), total);
}

RootTwo truncated_otoc(const DopedCircuit &c, const Partition &part, const std::vector<PauliString> &gens) {
    check_partition(c, part);
    group_basis(part.n, gens, &part);
    // The identity keeps an empty generator list meaningful.
    std::vector<PauliString> with_identity = gens;
    with_identity.push_back(PauliString(part.n));
    std::vector<F2Vec> group = enumerate_group(with_identity);
    RootTwoSum acc;
    for (const F2Vec &vec : group) {
        PauliSum x = propagate_pauli(PauliString(vec), c);
        for (const PauliTerm &term : x.terms()) {
            if (trivial_on_a(term.vec, part.a)) {
                acc.add_product(term.coeff, term.coeff);
            }
        }
    }
    return ratio(acc.value(), group.size());
}

std::pair<RootTwo, RootTwo> correction_terms(const DopedCircuit &c, const CliffordTableau &v, const Partition &part,
                                             const std::vector<PauliString> &gens) {
    HPReport rep = hp_report(c, v, part, gens);
    return {rep.r, rep.r_prime};
}

RootTwo fidelity(const DopedCircuit &c, const CliffordTableau &v, const Partition &part) {
    return hp_report(c, v, part, {}).fidelity;
}

RootTwo gate_fidelity(const DopedCircuit &c, const CliffordTableau &v) {
    const size_t n = c.num_qubits();
    if (n > kMaxEnumeratedD) {
        throw std::invalid_argument("gate_fidelity: n is too large to enumerate all Pauli strings.");
    }
    RootTwoSum acc;
    for (uint64_t i = 0; i < (uint64_t{1} << (2 * n)); i++) {
        PauliString p = local_pauli(n, 0, n, i);
        PauliString q = v.conjugate(p);
        acc.add(propagate_pauli(p, c).coeff_of(q.vec), q.sign());
    }
    return ratio(acc.value(), uint64_t{1} << (2 * n));
}

RootTwo scrambler_otoc_value(const Partition &part) {
    BigRational ia(BigInt(1), BigInt(1) << (2 * part.a));
    BigRational id(BigInt(1), BigInt(1) << (2 * part.d));
    return RootTwo(ia + id - ia * id);
}

bool is_scrambler(const DopedCircuit &c, const Partition &part, double tol) {
    if (tol < 0) {
        tol = 4.0 / std::ldexp(1.0, (int)part.n);
    }
    double diff = (four_point_otoc(c, part) - scrambler_otoc_value(part)).to_double();
    return std::abs(diff) <= tol;
}

HPReport hp_report(const DopedCircuit &c, const CliffordTableau &v, const Partition &part,
                   const std::vector<PauliString> &gens) {
    check_partition(c, part);
    F2Basis group = group_basis(part.n, gens, &part);
    const size_t n = part.n;
    const uint64_t total = uint64_t{1} << (2 * part.d);
    const RootTwo da2 = RootTwo::from_int(int64_t{1} << (2 * part.a));

    RootTwoSum num, den, otoc_all, otoc_group, r, r_prime;
    HPReport rep;
    for (uint64_t i = 0; i < total; i++) {
        PauliString pd = local_pauli(n, part.d_offset(), part.d, i);
        PauliSum x = propagate_pauli(pd, c);
        const bool in_group = group.contains(pd.vec);
        rep.gd_size += in_group;
        rep.true_gd_size += x.size() == 1 && x.terms()[0].coeff.is_unit();
        for (const PauliTerm &term : x.terms()) {
            if (trivial_on_a(term.vec, part.a)) {
                otoc_all.add_product(term.coeff, term.coeff);
                if (in_group) {
                    otoc_group.add_product(term.coeff, term.coeff);
                }
            }
        }
        PauliString q = v.conjugate(pd);
        Coeff overlap = x.coeff_of(q.vec);
        if (q.sign() < 0) {
            overlap = -overlap;
        }
        const bool q_trivial = trivial_on_a(q.vec, part.a);
        num.add(overlap);
        if (q_trivial) {
            den.add(overlap);
        }
        if (!in_group) {
            r.add(overlap);
            if (q_trivial) {
                r_prime.add(overlap);
            }
        }
    }
    rep.omega4 = ratio(otoc_all.value(), total);
    rep.omega_gd = ratio(otoc_group.value(), rep.gd_size);
    rep.r = ratio(r.value(), rep.gd_size);
    rep.r_prime = ratio(r_prime.value() * da2, rep.gd_size);
    rep.success = rep.r.is_zero() && rep.r_prime.is_zero();
    if (den.value().is_zero()) {
        throw std::runtime_error("hp_report: fidelity denominator vanishes.");
    }
    rep.fidelity = num.value() / (den.value() * da2);
    rep.fidelity_from_parts = (RootTwo::from_int(1) + rep.r) / (da2 * rep.omega_gd + rep.r_prime);
    return rep;
}

std::string HPReport::str() const {
    std::ostringstream out;
    auto field = [&](const char *key, const RootTwo &v) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.12g", v.to_double());
        out << key << "=" << v.str() << "\n" << key << "_f=" << buf << "\n";
    };
    field("fidelity", fidelity);
    field("fidelity_from_parts", fidelity_from_parts);
    field("omega_gd", omega_gd);
    field("omega4", omega4);
    field("R", r);
    field("Rprime", r_prime);
    out << "gd_size=" << gd_size << "\n";
    out << "true_gd_size=" << true_gd_size << "\n";
    out << "success=" << (success ? "true" : "false") << "\n";
    return out.str();
}

}  // namespace ccd
