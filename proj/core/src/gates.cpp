// Copyright 2026 The nandsim Authors
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

#include "nandsim/gates.hpp"

#include <cmath>

#include "nandsim/errors.hpp"

namespace nandsim {

void ResourceCounter::add_gates(unsigned arity, std::uint64_t count) {
    switch (arity) {
        case 1:
            one_qubit_gates += count;
            break;
        case 2:
            two_qubit_gates += count;
            break;
        case 3:
            three_qubit_gates += count;
            break;
        default:
            throw InvalidInput("no gate counter for arity " + std::to_string(arity));
    }
}

ResourceCounter &ResourceCounter::operator+=(const ResourceCounter &o) {
    oracle_queries += o.oracle_queries;
    one_qubit_gates += o.one_qubit_gates;
    two_qubit_gates += o.two_qubit_gates;
    three_qubit_gates += o.three_qubit_gates;
    return *this;
}

namespace {

using Mask = std::uint64_t;

struct Applier {
    StateVector &s;
    ResourceCounter &counter;

    std::span<Complex> amps() { return s.mutable_amplitudes(); }

    void check(std::initializer_list<Qubit> qs) { require_distinct(std::span<const Qubit>(qs.begin(), qs.size()), s.width()); }

    void operator()(const gate::Hadamard &g) {
        check({g.target});
        const double r = std::sqrt(0.5);
        Mask m = s.mask(g.target);
        auto a = amps();
        for (std::size_t i = 0; i < a.size(); ++i) {
            if ((i & m) == 0) {
                Complex x = a[i];
                Complex y = a[i | m];
                a[i] = (x + y) * r;
                a[i | m] = (x - y) * r;
            }
        }
        counter.add_gates(1);
    }

    void operator()(const gate::PauliX &g) {
        check({g.target});
        Mask m = s.mask(g.target);
        auto a = amps();
        for (std::size_t i = 0; i < a.size(); ++i) {
            if ((i & m) == 0) {
                std::swap(a[i], a[i | m]);
            }
        }
        counter.add_gates(1);
    }

    void operator()(const gate::ControlledDiagonal &g) {
        const DiagonalUnitary &u = g.oracle.get();
        std::vector<Qubit> all = g.targets;
        all.push_back(g.control);
        require_distinct(all, s.width());
        if (u.size() != (std::size_t{1} << g.targets.size())) {
            throw LayoutError("oracle of size " + std::to_string(u.size()) + " does not match a " +
                              std::to_string(g.targets.size()) + "-qubit target register");
        }
        std::vector<Mask> masks;
        for (Qubit q : g.targets) {
            masks.push_back(s.mask(q));
        }
        Mask c = s.mask(g.control);
        auto a = amps();
        for (std::size_t i = 0; i < a.size(); ++i) {
            if ((i & c) == 0) {
                continue;
            }
            std::size_t j = 0;
            for (Mask m : masks) {
                j = (j << 1) | ((i & m) != 0 ? 1u : 0u);
            }
            a[i] *= u.entry(j);
        }
        ++counter.oracle_queries;
    }

    void operator()(const gate::Toffoli &g) {
        check({g.control0, g.control1, g.target});
        Mask c = s.mask(g.control0) | s.mask(g.control1);
        Mask t = s.mask(g.target);
        auto a = amps();
        for (std::size_t i = 0; i < a.size(); ++i) {
            if ((i & c) == c && (i & t) == 0) {
                std::swap(a[i], a[i | t]);
            }
        }
        counter.add_gates(3);
    }

    void operator()(const gate::ControlledZ &g) {
        check({g.control, g.target});
        Mask m = s.mask(g.control) | s.mask(g.target);
        auto a = amps();
        for (std::size_t i = 0; i < a.size(); ++i) {
            if ((i & m) == m) {
                a[i] = -a[i];
            }
        }
        counter.add_gates(2);
    }

    void operator()(const gate::PolarityCCZ &g) {
        check({g.control0, g.control1, g.target});
        if (g.polarity0 > 1 || g.polarity1 > 1) {
            throw InvalidInput("control polarity must be 0 or 1");
        }
        Mask m0 = s.mask(g.control0);
        Mask m1 = s.mask(g.control1);
        Mask want = (g.polarity0 != 0 ? m0 : 0) | (g.polarity1 != 0 ? m1 : 0);
        Mask sel = m0 | m1;
        Mask t = s.mask(g.target);
        auto a = amps();
        for (std::size_t i = 0; i < a.size(); ++i) {
            if ((i & sel) == want && (i & t) != 0) {
                a[i] = -a[i];
            }
        }
        counter.add_gates(3);
    }

    void operator()(const gate::Fourier &g) {
        require_distinct(g.qubits, s.width());
        const std::size_t w = g.qubits.size();
        if (w == 0) {
            return;
        }
        const std::size_t dim = std::size_t{1} << w;
        const long long sign = g.inverse ? -1 : 1;
        const double r = std::sqrt(1.0 / static_cast<double>(dim));

        std::vector<Mask> offsets(dim, 0);
        Mask reg = 0;
        for (std::size_t k = 0; k < w; ++k) {
            reg |= s.mask(g.qubits[k]);
        }
        for (std::size_t v = 0; v < dim; ++v) {
            for (std::size_t k = 0; k < w; ++k) {
                if ((v >> (w - 1 - k)) & 1) {
                    offsets[v] |= s.mask(g.qubits[k]);
                }
            }
        }
        std::vector<Complex> roots(dim);
        for (std::size_t v = 0; v < dim; ++v) {
            roots[v] = unit_root(sign * static_cast<long long>(v), static_cast<long long>(dim));
        }

        auto a = amps();
        std::vector<Complex> in(dim);
        for (std::size_t base = 0; base < a.size(); ++base) {
            if ((base & reg) != 0) {
                continue;
            }
            for (std::size_t v = 0; v < dim; ++v) {
                in[v] = a[base | offsets[v]];
            }
            for (std::size_t y = 0; y < dim; ++y) {
                Complex sum{};
                for (std::size_t x = 0; x < dim; ++x) {
                    sum += roots[(x * y) % dim] * in[x];
                }
                a[base | offsets[y]] = sum * r;
            }
        }
        counter.add_gates(1, w);
        counter.add_gates(2, w * (w - 1) / 2 + w / 2);
    }
};

}  // namespace

void apply_gate(StateVector &s, const Gate &g, ResourceCounter &counter) { std::visit(Applier{s, counter}, g); }

}  // namespace nandsim
