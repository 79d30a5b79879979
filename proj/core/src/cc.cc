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

#include "ccdecode/cc.h"

#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>

namespace ccd {

namespace {

PauliString restrict_to(const PauliString &p, size_t offset, size_t count) {
    PauliString r(count);
    for (size_t j = 0; j < count; j++) {
        r.vec.set_x(j, p.vec.x(offset + j));
        r.vec.set_z(j, p.vec.z(offset + j));
    }
    r.phase_exp = p.phase_exp;
    return r;
}

PauliString extend_to(const PauliString &p, size_t n, size_t offset) {
    PauliString r(n);
    for (size_t j = 0; j < p.num_qubits(); j++) {
        r.vec.set_x(offset + j, p.vec.x(j));
        r.vec.set_z(offset + j, p.vec.z(j));
    }
    r.phase_exp = p.phase_exp;
    return r;
}

std::vector<PauliString> sources_of(const std::vector<LearnedGenerator> &gens) {
    std::vector<PauliString> out;
    for (const auto &g : gens) {
        out.push_back(g.source);
    }
    return out;
}

TauMatrix tau_or_empty(size_t n, const std::vector<PauliString> &h) {
    return h.empty() ? TauMatrix(n) : build_tau(h);
}

// Searches for a preserved lift of a Pauli drawn on local qubits [used, nd),
// optionally anticommuting with `partner`. Returns true and fills `out` on
// success.
bool search(Oracle &oracle, const CliffordTableau &dhat_inv, size_t m, size_t used, size_t budget,
            const PauliString *partner, Rng &rng, LearnStats &stats, PauliString *local, LearnedGenerator *out) {
    const size_t n = oracle.circuit().num_qubits();
    const size_t nd = n - m;
    for (size_t it = 0; it < budget; it++) {
        PauliString p = random_pauli(nd, used, rng);
        if (partner != nullptr) {
            while (p.commutes(*partner)) {
                p = random_pauli(nd, used, rng);
            }
        }
        stats.sampling_steps++;
        if (p.is_identity()) {
            continue;
        }
        // D p D^dag is conjugation by the tableau of D^dag.
        PauliString lifted = dhat_inv.conjugate(p);
        lifted.phase_exp = 0;
        PauliString sigma = extend_to(lifted, n, m);
        PauliString q = oracle.learn(sigma, rng);
        if (oracle.verify(sigma, q, rng)) {
            *local = p;
            out->source = sigma;
            out->image = q;
            out->sign = oracle.phase(sigma, q, rng);
            return true;
        }
    }
    return false;
}

}  // namespace

size_t default_budget(size_t n, size_t t) {
    return (size_t)std::ceil(std::ldexp((double)n, (int)t + 2) / 3.0);
}

CliffordTableau complete_decoder(size_t n, const std::vector<LearnedGenerator> &gens, Rng &rng) {
    std::vector<PauliString> sources = sources_of(gens), images;
    for (const auto &g : gens) {
        images.push_back(g.image);
    }
    TauMatrix tau_src = tau_or_empty(n, sources);
    TauMatrix tau_img = tau_or_empty(n, images);
    if (tau_src.source != tau_img.source) {
        throw std::logic_error("complete_decoder: images do not share the commutation pattern of the sources.");
    }
    std::vector<uint8_t> phase_bits(2 * n, 0);
    for (size_t k = 0; k < 2 * n; k++) {
        if (tau_img.source[k] >= 0) {
            phase_bits[k] = gens[(size_t)tau_img.source[k]].sign < 0;
        }
    }
    // W^dag e_a W = sign_a image_a and D^dag source_a D = e_a give V = D W.
    CliffordTableau w = complete_constrained(tau_img, phase_bits, rng);
    CliffordTableau delta = diagonalize(tau_src).dhat;
    CliffordTableau v = compose(delta, w);
    for (const auto &g : gens) {
        PauliString expect = g.image;
        expect.phase_exp = g.sign < 0 ? 2 : 0;
        if (v.conjugate(g.source) != expect) {
            throw std::logic_error("complete_decoder: constraint not met for " + g.source.str() + ".");
        }
    }
    return v;
}

LearnResult learn(Oracle &oracle, const CCParams &params, Rng &rng) {
    const DopedCircuit &c = oracle.circuit();
    const size_t n = c.num_qubits();
    if (params.m >= n) {
        throw std::invalid_argument("learn: m must be smaller than n.");
    }
    const size_t m = params.m;
    const size_t nd = n - m;
    const size_t budget = params.budget ? params.budget : default_budget(n, c.t_count());
    const QueryStats before = oracle.stats();

    LearnResult res;
    res.num_qubits = n;
    res.m = m;
    CliffordTableau dhat_local(nd), dhat_local_inv(nd);
    size_t used = 0;
    F2Basis span(n);
    auto accept = [&](const LearnedGenerator &g) {
        if (!span.insert(g.source.vec)) {
            throw std::logic_error("learn: lifted candidate is dependent on earlier generators.");
        }
        res.generators.push_back(g);
    };
    for (size_t k = 1; k <= nd && used < nd; k++) {
        uint64_t steps_before = res.stats.sampling_steps;
        PauliString px_local, pz_local;
        LearnedGenerator gx, gz;
        if (!search(oracle, dhat_local_inv, m, used, budget, nullptr, rng, res.stats, &px_local, &gx)) {
            break;
        }
        res.stats.x_trials.push_back(res.stats.sampling_steps - steps_before);
        accept(gx);
        if (search(oracle, dhat_local_inv, m, used, budget, &px_local, rng, res.stats, &pz_local, &gz)) {
            accept(gz);
        }
        res.stats.k_reached = k;

        std::vector<PauliString> local;
        for (const auto &g : res.generators) {
            local.push_back(restrict_to(g.source, m, nd));
        }
        DiagonalizeResult diag = diagonalize(build_tau(local));
        dhat_local = diag.dhat;
        dhat_local_inv = dhat_local.inverse();
        used = diag.out.num_slots();
    }

    res.tau = tau_or_empty(n, sources_of(res.generators));
    res.v = complete_decoder(n, res.generators, rng);
    res.dhat = embed(dhat_local, n, m);
    const QueryStats &after = oracle.stats();
    res.stats.oracle_queries = after.queries - before.queries;
    res.stats.oracle_calls = after.calls - before.calls;
    return res;
}

LearnResult learn(const DopedCircuit &c, const CCParams &params, Rng &rng) {
    Oracle oracle(c, params.oracle);
    return learn(oracle, params, rng);
}

std::string LearnResult::str() const {
    std::ostringstream out;
    out << "learn n=" << num_qubits << " m=" << m << "\n";
    out << "[V]\n" << v.str();
    out << "[Dhat]\n" << dhat.str();
    out << "[generators]\n";
    for (const auto &g : generators) {
        out << g.source.str().substr(1) << " " << g.image.str().substr(1) << " " << (g.sign < 0 ? "-1" : "+1")
            << "\n";
    }
    out << "[stats]\n";
    out << "sampling_steps=" << stats.sampling_steps << "\n";
    out << "oracle_queries=" << stats.oracle_queries << "\n";
    out << "oracle_calls=" << stats.oracle_calls << "\n";
    out << "k_reached=" << stats.k_reached << "\n";
    out << "num_generators=" << generators.size() << "\n";
    out << "num_pairs=" << tau.num_pairs << "\n";
    return out.str();
}

LearnResult LearnResult::from_text(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line.rfind("learn n=", 0) != 0) {
        throw std::invalid_argument("Expected a 'learn n=<N> m=<M>' header.");
    }
    LearnResult res;
    if (std::sscanf(line.c_str(), "learn n=%zu m=%zu", &res.num_qubits, &res.m) != 2) {
        throw std::invalid_argument("Malformed learn header '" + line + "'.");
    }
    std::map<std::string, std::string> sections;
    std::string current;
    while (std::getline(in, line)) {
        if (line.size() > 2 && line.front() == '[' && line.back() == ']') {
            current = line.substr(1, line.size() - 2);
            continue;
        }
        sections[current] += line + "\n";
    }
    for (const char *name : {"V", "Dhat", "generators", "stats"}) {
        if (!sections.count(name)) {
            throw std::invalid_argument(std::string("Missing [") + name + "] section.");
        }
    }
    res.v = CliffordTableau::from_text(sections["V"]);
    res.dhat = CliffordTableau::from_text(sections["Dhat"]);
    std::istringstream gens(sections["generators"]);
    std::string src, img, sign;
    while (gens >> src >> img >> sign) {
        res.generators.push_back({PauliString::from_text(src), PauliString::from_text(img), sign == "-1" ? -1 : 1});
    }
    std::istringstream stats(sections["stats"]);
    while (std::getline(stats, line)) {
        size_t eq = line.find('=');
        if (eq == std::string::npos) {
            continue;
        }
        std::string key = line.substr(0, eq);
        uint64_t value = std::stoull(line.substr(eq + 1));
        if (key == "sampling_steps") {
            res.stats.sampling_steps = value;
        } else if (key == "oracle_queries") {
            res.stats.oracle_queries = value;
        } else if (key == "oracle_calls") {
            res.stats.oracle_calls = value;
        } else if (key == "k_reached") {
            res.stats.k_reached = value;
        }
    }
    res.tau = tau_or_empty(res.num_qubits, sources_of(res.generators));
    return res;
}

DopedCircuit residual_circuit(const DopedCircuit &c, const CliffordTableau &u0, const CliffordTableau &u0_prime) {
    const size_t n = c.num_qubits();
    GateList gates = synthesize(u0_prime.inverse());
    gates.insert(gates.end(), c.gates().begin(), c.gates().end());
    GateList tail = synthesize(u0.inverse());
    gates.insert(gates.end(), tail.begin(), tail.end());
    return DopedCircuit(n, std::move(gates));
}

bool identity_block_holds(const DopedCircuit &residual, size_t s) {
    const size_t n = residual.num_qubits();
    for (size_t j = 0; j < s; j++) {
        for (char letter : {'X', 'Z'}) {
            PauliString p = PauliString::single(n, j, letter);
            auto img = check_preserved(p, residual);
            if (!img || img->second != 1 || img->first.vec != p.vec) {
                return false;
            }
        }
    }
    return true;
}

DecomposeResult decompose(const DopedCircuit &c, Rng &rng, const CCParams &params, size_t max_retries) {
    CCParams p = params;
    p.m = 0;
    for (size_t attempt = 1; attempt <= max_retries + 1; attempt++) {
        DecomposeResult r;
        r.learned = learn(c, p, rng);
        r.u0 = r.learned.dhat;
        r.u0_prime = compose(r.learned.dhat, r.learned.v, true);
        r.s = r.learned.tau.num_pairs;
        r.residual = residual_circuit(c, r.u0, r.u0_prime);
        r.attempts = attempt;
        if (identity_block_holds(r.residual, r.s)) {
            return r;
        }
    }
    throw std::runtime_error("decompose: identity-block verification failed after retries.");
}

CompressResult compress_state(const DopedCircuit &c, Rng &rng, const CCParams &params) {
    const size_t n = c.num_qubits();
    if (n > kDenseMaxQubits) {
        throw std::invalid_argument("compress_state: n exceeds the dense cap.");
    }
    CCParams p = params;
    p.m = 0;
    LearnResult learned = learn(c, p, rng);

    // Preserved strings whose image is a Z string stabilize U|0>.
    std::vector<F2Vec> images, zs;
    F2Basis image_basis(n);
    for (const auto &g : learned.generators) {
        images.push_back(g.image.vec);
        image_basis.insert(g.image.vec);
    }
    for (size_t j = 0; j < n; j++) {
        F2Vec z(n);
        z.set_z(j, true);
        zs.push_back(z);
    }
    std::vector<PauliString> stabilizers;
    std::vector<uint8_t> signs;
    for (const F2Vec &w : f2_intersection(images, zs)) {
        std::vector<size_t> idx;
        if (!image_basis.decompose(w, &idx)) {
            throw std::logic_error("compress_state: intersection vector outside the image span.");
        }
        F2Vec q(n);
        for (size_t i : idx) {
            q ^= learned.generators[i].source.vec;
        }
        PauliString stab(q);
        auto img = check_preserved(stab, c);
        if (!img || img->first.vec != w) {
            throw std::logic_error("compress_state: stabilizer candidate is not preserved.");
        }
        stabilizers.push_back(stab);
        signs.push_back(img->second < 0);
    }

    CompressResult res;
    res.s = stabilizers.size();
    CliffordTableau dhat(n);
    if (!stabilizers.empty()) {
        TauMatrix tau = build_tau(stabilizers);
        std::vector<uint8_t> sign_bits(2 * n, 0);
        for (size_t k = 0; k < 2 * n; k++) {
            if (tau.source[k] >= 0) {
                sign_bits[k] = signs[(size_t)tau.source[k]];
            }
        }
        dhat = diagonalize_signed(tau, sign_bits).dhat;
    }
    GateList hs;
    for (uint32_t j = 0; j < res.s; j++) {
        hs.push_back(Gate::h(j));
    }
    res.dtilde = compose(dhat, CliffordTableau::from_gates(n, hs));

    DenseVector psi = dense_unitary(c).col(0);
    DenseVector chi = dense_unitary(res.dtilde).adjoint() * psi;
    const Eigen::Index rest = (Eigen::Index)1 << (n - res.s);
    res.phi = DenseVector(rest);
    for (Eigen::Index i = 0; i < rest; i++) {
        res.phi(i) = chi(i << res.s);
    }
    if (std::abs(res.phi.norm() - 1.0) > 1e-9) {
        throw std::runtime_error("compress_state: residual state is not normalized.");
    }
    return res;
}

DenseMatrix residual_reconstruct(const DopedCircuit &c, const CliffordTableau &u0, const CliffordTableau &u0_prime,
                                 size_t s, double tol) {
    const size_t n = c.num_qubits();
    if (n > kDenseMaxQubits) {
        throw std::invalid_argument("residual_reconstruct: n exceeds the dense cap.");
    }
    DenseMatrix full = dense_unitary(residual_circuit(c, u0, u0_prime));
    const Eigen::Index lo = (Eigen::Index)1 << s;
    const Eigen::Index hi = (Eigen::Index)1 << (n - s);
    DenseMatrix u(hi, hi);
    for (Eigen::Index a = 0; a < hi; a++) {
        for (Eigen::Index b = 0; b < hi; b++) {
            u(a, b) = full(a * lo, b * lo);
        }
    }
    for (Eigen::Index i = 0; i < full.rows(); i++) {
        for (Eigen::Index j = 0; j < full.cols(); j++) {
            std::complex<double> expect = (i % lo == j % lo) ? u(i / lo, j / lo) : 0.0;
            if (std::abs(full(i, j) - expect) > tol) {
                throw std::runtime_error("residual_reconstruct: residual is not the identity on the first s qubits.");
            }
        }
    }
    return u;
}

}  // namespace ccd
