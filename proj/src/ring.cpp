// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "frobcode/ring.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <set>

#include "frobcode/error.hpp"

namespace frobcode {

namespace {

// Tables in the constructor's natural encoding; `identity` is the natural
// index of 1, which finalize() swaps into position 1.
struct Natural {
    std::size_t size = 0;
    std::vector<Element> add;
    std::vector<Element> mul;
    std::vector<std::string> labels;
    std::vector<std::uint32_t> char_exp;
    std::uint32_t additive_exponent = 1;
    Element identity = 1;
};

using Poly = std::vector<std::uint64_t>;  // coefficients mod p, index = degree

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic-or-not b over Z_p (p prime).
Poly poly_mod(Poly a, const Poly& b, std::uint64_t p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    std::uint64_t inv_lead = 1;
    for (std::uint64_t v = 1; v < p; ++v) {
        if ((b.back() * v) % p == 1) inv_lead = v;
    }
    while (a.size() > db) {
        const std::uint64_t factor = (a.back() * inv_lead) % p;
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t j = 0; j <= db; ++j) {
            a[shift + j] = (a[shift + j] + p - (factor * b[j]) % p) % p;
        }
        trim(a);
    }
    return a;
}

Poly decode_poly(std::uint64_t code, std::uint64_t p, std::size_t len) {
    Poly r(len, 0);
    for (std::size_t i = 0; i < len; ++i) {
        r[i] = code % p;
        code /= p;
    }
    return r;
}

// Monic polynomial of degree k whose lower coefficients, read as a base-p
// number with the x^(k-1) coefficient most significant, equal `code`.
Poly monic_from_code(std::uint64_t code, std::uint64_t p, std::size_t k) {
    Poly f = decode_poly(code, p, k);
    f.push_back(1);
    return f;
}

bool is_irreducible(const Poly& f, std::uint64_t p) {
    const std::size_t k = f.size() - 1;
    for (std::size_t d = 1; d <= k / 2; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t c = 0; c < count; ++c) {
            if (poly_mod(f, monic_from_code(c, p, d), p).empty()) return false;
        }
    }
    return true;
}

Poly smallest_irreducible(std::uint64_t p, std::size_t k) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < k; ++i) count *= p;
    for (std::uint64_t c = 0; c < count; ++c) {
        Poly f = monic_from_code(c, p, k);
        if (is_irreducible(f, p)) return f;
    }
    throw Error(Errc::internal, "no irreducible polynomial found");
}

Natural build_zm(std::uint64_t m) {
    Natural n;
    n.size = m;
    n.add.resize(m * m);
    n.mul.resize(m * m);
    for (std::uint64_t a = 0; a < m; ++a) {
        for (std::uint64_t b = 0; b < m; ++b) {
            n.add[a * m + b] = static_cast<Element>((a + b) % m);
            n.mul[a * m + b] = static_cast<Element>((a * b) % m);
        }
        n.labels.push_back(std::to_string(a));
        n.char_exp.push_back(static_cast<std::uint32_t>(a));
    }
    n.additive_exponent = static_cast<std::uint32_t>(m);
    return n;
}

std::string gf_label(const Poly& coeffs, std::uint64_t p) {
    if (coeffs.size() == 1) return std::to_string(coeffs[0]);
    std::string s;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (p > 10 && i > 0) s += '.';
        s += std::to_string(coeffs[i]);
    }
    return s;
}

Natural build_gf(std::uint64_t p, std::size_t k) {
    const Poly modulus = smallest_irreducible(p, k);
    std::uint64_t q = 1;
    for (std::size_t i = 0; i < k; ++i) q *= p;
    Natural n;
    n.size = q;
    n.add.resize(q * q);
    n.mul.resize(q * q);
    std::vector<Poly> elems;
    for (std::uint64_t c = 0; c < q; ++c) elems.push_back(decode_poly(c, p, k));
    auto encode = [&](const Poly& a) {
        std::uint64_t code = 0;
        for (std::size_t i = a.size(); i-- > 0;) code = code * p + a[i];
        return static_cast<Element>(code);
    };
    for (std::uint64_t a = 0; a < q; ++a) {
        for (std::uint64_t b = 0; b < q; ++b) {
            Poly sum(k), prod(2 * k, 0);
            for (std::size_t i = 0; i < k; ++i) {
                sum[i] = (elems[a][i] + elems[b][i]) % p;
                for (std::size_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + elems[a][i] * elems[b][j]) % p;
            }
            Poly red = poly_mod(prod, modulus, p);
            red.resize(k, 0);
            n.add[a * q + b] = encode(sum);
            n.mul[a * q + b] = encode(red);
        }
        n.labels.push_back(gf_label(elems[a], p));
    }
    // Absolute trace x + x^p + ... + x^(p^(k-1)) lands in the prime field, i.e. indices 0..p-1.
    for (std::uint64_t x = 0; x < q; ++x) {
        Element frob = static_cast<Element>(x);
        Element trace = 0;
        for (std::size_t j = 0; j < k; ++j) {
            trace = n.add[trace * q + frob];
            Element pw = 1;
            for (std::uint64_t e = 0; e < p; ++e) pw = n.mul[pw * q + frob];
            frob = pw;
        }
        if (trace >= p) throw Error(Errc::internal, "trace left the prime field");
        n.char_exp.push_back(trace);
    }
    n.additive_exponent = static_cast<std::uint32_t>(p);
    return n;
}

Natural build_mat(std::size_t dim, const Ring& inner) {
    const std::size_t s = inner.size();
    const std::size_t cells = dim * dim;
    std::size_t total = 1;
    for (std::size_t i = 0; i < cells; ++i) total *= s;
    // Entry (0,0) is the most significant base-|S| digit.
    std::vector<Element> entries(total * cells);
    for (std::size_t e = 0; e < total; ++e) {
        std::size_t code = e;
        for (std::size_t c = cells; c-- > 0;) {
            entries[e * cells + c] = static_cast<Element>(code % s);
            code /= s;
        }
    }
    auto encode = [&](const std::vector<Element>& m) {
        std::size_t code = 0;
        for (std::size_t c = 0; c < cells; ++c) code = code * s + m[c];
        return static_cast<Element>(code);
    };
    Natural n;
    n.size = total;
    n.add.resize(total * total);
    n.mul.resize(total * total);
    std::vector<Element> tmp(cells);
    for (std::size_t a = 0; a < total; ++a) {
        const Element* A = &entries[a * cells];
        for (std::size_t b = 0; b < total; ++b) {
            const Element* B = &entries[b * cells];
            for (std::size_t c = 0; c < cells; ++c) tmp[c] = inner.add(A[c], B[c]);
            n.add[a * total + b] = encode(tmp);
            for (std::size_t i = 0; i < dim; ++i) {
                for (std::size_t j = 0; j < dim; ++j) {
                    Element acc = Ring::zero();
                    for (std::size_t l = 0; l < dim; ++l) acc = inner.add(acc, inner.mul(A[i * dim + l], B[l * dim + j]));
                    tmp[i * dim + j] = acc;
                }
            }
            n.mul[a * total + b] = encode(tmp);
        }
        std::string label = "[";
        Element trace = Ring::zero();
        for (std::size_t c = 0; c < cells; ++c) {
            if (c > 0) label += ';';
            label += inner.label(A[c]);
        }
        for (std::size_t i = 0; i < dim; ++i) trace = inner.add(trace, A[i * dim + i]);
        n.labels.push_back(label + "]");
        n.char_exp.push_back(inner.char_exp(trace));
    }
    std::vector<Element> id(cells, Ring::zero());
    for (std::size_t i = 0; i < dim; ++i) id[i * dim + i] = Ring::one();
    n.identity = encode(id);
    n.additive_exponent = inner.additive_exponent();
    return n;
}

std::string component_label(const Ring& r, Element x) {
    if (r.spec().kind == RingSpec::Kind::prod) return "(" + r.label(x) + ")";
    return r.label(x);
}

Natural build_prod(const Ring& left, const Ring& right) {
    const std::size_t sl = left.size();
    const std::size_t sr = right.size();
    const std::size_t total = sl * sr;
    const std::uint32_t nl = left.additive_exponent();
    const std::uint32_t nr = right.additive_exponent();
    const std::uint32_t big_n = std::lcm(nl, nr);
    Natural n;
    n.size = total;
    n.add.resize(total * total);
    n.mul.resize(total * total);
    for (std::size_t a = 0; a < total; ++a) {
        const auto al = static_cast<Element>(a / sr);
        const auto ar = static_cast<Element>(a % sr);
        for (std::size_t b = 0; b < total; ++b) {
            const auto bl = static_cast<Element>(b / sr);
            const auto br = static_cast<Element>(b % sr);
            n.add[a * total + b] = static_cast<Element>(left.add(al, bl) * sr + right.add(ar, br));
            n.mul[a * total + b] = static_cast<Element>(left.mul(al, bl) * sr + right.mul(ar, br));
        }
        n.labels.push_back(component_label(left, al) + "|" + component_label(right, ar));
        const std::uint64_t e = static_cast<std::uint64_t>(big_n / nl) * left.char_exp(al) +
                                static_cast<std::uint64_t>(big_n / nr) * right.char_exp(ar);
        n.char_exp.push_back(static_cast<std::uint32_t>(e % big_n));
    }
    n.identity = static_cast<Element>(sr + 1);
    n.additive_exponent = big_n;
    return n;
}

// F_q[u]/(u^2), element a + b u stored at a + q b.
Natural build_chain(const Ring& field) {
    const std::size_t q = field.size();
    const std::size_t total = q * q;
    Natural n;
    n.size = total;
    n.add.resize(total * total);
    n.mul.resize(total * total);
    for (std::size_t x = 0; x < total; ++x) {
        const auto a = static_cast<Element>(x % q);
        const auto b = static_cast<Element>(x / q);
        for (std::size_t y = 0; y < total; ++y) {
            const auto c = static_cast<Element>(y % q);
            const auto d = static_cast<Element>(y / q);
            n.add[x * total + y] = static_cast<Element>(field.add(a, c) + q * field.add(b, d));
            const Element lin = field.add(field.mul(a, d), field.mul(b, c));
            n.mul[x * total + y] = static_cast<Element>(field.mul(a, c) + q * lin);
        }
        n.labels.push_back(field.label(a) + "+" + field.label(b) + "u");
        n.char_exp.push_back(field.char_exp(field.add(a, b)));
    }
    n.additive_exponent = field.additive_exponent();
    return n;
}

Ring::Tables finalize(Natural n, const RingSpec& spec) {
    std::vector<Element> to_index(n.size);
    std::iota(to_index.begin(), to_index.end(), Element{0});
    if (n.size > 1 && n.identity != 1) std::swap(to_index[1], to_index[n.identity]);
    std::vector<Element> from_index(n.size);
    for (std::size_t i = 0; i < n.size; ++i) from_index[to_index[i]] = static_cast<Element>(i);

    Ring::Tables t;
    t.spec = spec;
    t.size = n.size;
    t.add.resize(n.size * n.size);
    t.mul.resize(n.size * n.size);
    t.char_exp.resize(n.size);
    t.labels.resize(n.size);
    for (std::size_t i = 0; i < n.size; ++i) {
        const Element ni = from_index[i];
        for (std::size_t j = 0; j < n.size; ++j) {
            const Element nj = from_index[j];
            t.add[i * n.size + j] = to_index[n.add[ni * n.size + nj]];
            t.mul[i * n.size + j] = to_index[n.mul[ni * n.size + nj]];
        }
        t.char_exp[i] = n.char_exp[ni];
        t.labels[i] = std::move(n.labels[ni]);
    }
    t.additive_exponent = n.additive_exponent;
    return t;
}

std::string strip_ws(std::string_view s) {
    std::string out;
    for (char c : s) {
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    }
    return out;
}

}  // namespace

std::uint64_t default_ring_cap() {
    if (const char* env = std::getenv("FROBCODE_CAP")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return v;
    }
    return 512;
}

Ring::Ring(Tables t)
    : spec_(std::move(t.spec)),
      size_(t.size),
      add_(std::move(t.add)),
      mul_(std::move(t.mul)),
      additive_exponent_(t.additive_exponent),
      char_exp_(std::move(t.char_exp)),
      labels_(std::move(t.labels)) {
    if (size_ < 2 || add_.size() != size_ * size_ || mul_.size() != size_ * size_ || char_exp_.size() != size_ ||
        labels_.size() != size_) {
        throw Error(Errc::internal, "inconsistent ring tables");
    }
    for (Element x = 0; x < size_; ++x) {
        if (add(0, x) != x || mul(1, x) != x || mul(x, 1) != x) {
            throw Error(Errc::internal, "ring identities are not at indices 0 and 1");
        }
    }
    neg_.assign(size_, 0);
    unit_flag_.assign(size_, 0);
    for (Element x = 0; x < size_; ++x) {
        for (Element y = 0; y < size_; ++y) {
            if (add(x, y) == 0) neg_[x] = y;
            if (mul(x, y) == 1 && mul(y, x) == 1) unit_flag_[x] = 1;
            if (mul(x, y) != mul(y, x)) commutative_ = false;
        }
        if (unit_flag_[x]) units_.push_back(x);
        label_index_.emplace(labels_[x], x);
    }
}

Element Ring::parse_element(std::string_view literal) const {
    const std::string key = strip_ws(literal);
    if (auto it = label_index_.find(key); it != label_index_.end()) return it->second;
    const bool integral = spec_.kind == RingSpec::Kind::zm;
    if (integral && !key.empty()) {
        std::size_t i = key[0] == '-' ? 1 : 0;
        bool digits = i < key.size();
        for (std::size_t j = i; j < key.size(); ++j) digits = digits && std::isdigit(static_cast<unsigned char>(key[j]));
        if (digits && key.size() - i < 19) {
            const auto m = static_cast<long long>(size_);
            long long v = std::stoll(key) % m;
            if (v < 0) v += m;
            return static_cast<Element>(v);
        }
    }
    throw Error(Errc::bad_literal, "'" + std::string(literal) + "' is not an element of " + name());
}

RingPtr build_ring(const RingSpec& spec, std::uint64_t cap) {
    spec.validate(cap);
    Natural natural;
    switch (spec.kind) {
        case RingSpec::Kind::zm: natural = build_zm(spec.modulus); break;
        case RingSpec::Kind::gf: natural = build_gf(spec.prime, spec.degree); break;
        case RingSpec::Kind::mat: {
            const RingPtr inner = build_ring(spec.children[0], cap);
            natural = build_mat(spec.dim, *inner);
            break;
        }
        case RingSpec::Kind::prod: {
            const RingPtr left = build_ring(spec.children[0], cap);
            const RingPtr right = build_ring(spec.children[1], cap);
            natural = build_prod(*left, *right);
            break;
        }
        case RingSpec::Kind::chain: {
            const RingPtr field = build_ring(RingSpec::gf(spec.prime, spec.degree), cap);
            natural = build_chain(*field);
            break;
        }
    }
    auto ring = std::make_shared<const Ring>(finalize(std::move(natural), spec));
    if (!is_generating_character(*ring, ring->char_exps(), ring->additive_exponent())) {
        throw Error(Errc::malformed_character, "canonical character of " + ring->name() + " is not generating");
    }
    return ring;
}

RingPtr build_ring(std::string_view spec_text, std::uint64_t cap) { return build_ring(parse_ring_spec(spec_text), cap); }

bool verify_ring_axioms(const Ring& r) {
    const auto n = static_cast<Element>(r.size());
    for (Element a = 0; a < n; ++a) {
        if (r.add(a, r.neg(a)) != 0) return false;
        for (Element b = 0; b < n; ++b) {
            if (r.add(a, b) != r.add(b, a)) return false;
            for (Element c = 0; c < n; ++c) {
                if (r.add(r.add(a, b), c) != r.add(a, r.add(b, c))) return false;
                if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c))) return false;
                if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c))) return false;
                if (r.mul(r.add(a, b), c) != r.add(r.mul(a, c), r.mul(b, c))) return false;
            }
        }
    }
    return true;
}

bool Ideal::contains(Element x) const { return std::binary_search(members.begin(), members.end(), x); }

Ideal principal_ideal(const Ring& ring, Element x, Side side) {
    std::vector<std::uint8_t> seen(ring.size(), 0);
    for (Element r = 0; r < ring.size(); ++r) seen[side == Side::left ? ring.mul(r, x) : ring.mul(x, r)] = 1;
    Ideal ideal{side, x, {}};
    for (Element y = 0; y < ring.size(); ++y) {
        if (seen[y]) ideal.members.push_back(y);
    }
    return ideal;
}

bool is_generating_character(const Ring& ring, std::span<const std::uint32_t> e, std::uint32_t modulus) {
    const auto n = static_cast<Element>(ring.size());
    if (e.size() != n || modulus == 0) throw Error(Errc::malformed_character, "character table has the wrong shape");
    for (Element x = 0; x < n; ++x) {
        if (e[x] >= modulus) throw Error(Errc::malformed_character, "character exponent out of range");
        for (Element y = 0; y < n; ++y) {
            if (e[ring.add(x, y)] != (e[x] + e[y]) % modulus) {
                throw Error(Errc::malformed_character, "character exponent map is not additive");
            }
        }
    }
    for (Element x = 1; x < n; ++x) {
        bool left_ok = false;
        bool right_ok = false;
        for (Element r = 0; r < n && !(left_ok && right_ok); ++r) {
            left_ok = left_ok || e[ring.mul(r, x)] != 0;
            right_ok = right_ok || e[ring.mul(x, r)] != 0;
        }
        if (!left_ok || !right_ok) return false;
    }
    return true;
}

std::vector<Ideal> minimal_left_ideals(const Ring& ring) {
    const auto n = static_cast<Element>(ring.size());
    std::vector<std::size_t> ideal_size(n);
    std::vector<Element> stamp(n, n);
    for (Element x = 0; x < n; ++x) {
        std::size_t count = 0;
        for (Element r = 0; r < n; ++r) {
            const Element y = ring.mul(r, x);
            if (stamp[y] != x) {
                stamp[y] = x;
                ++count;
            }
        }
        ideal_size[x] = count;
    }
    std::set<std::vector<Element>> found;
    std::vector<Ideal> result;
    for (Element x = 1; x < n; ++x) {
        Ideal ideal = principal_ideal(ring, x, Side::left);
        const bool minimal = std::all_of(ideal.members.begin(), ideal.members.end(),
                                         [&](Element y) { return y == 0 || ideal_size[y] == ideal.size(); });
        if (!minimal || !found.insert(ideal.members).second) continue;
        ideal.generator = ideal.members[1];
        result.push_back(std::move(ideal));
    }
    std::sort(result.begin(), result.end(), [](const Ideal& a, const Ideal& b) { return a.members < b.members; });
    return result;
}

std::vector<Element> radical(const Ring& ring) {
    const auto n = static_cast<Element>(ring.size());
    std::vector<std::uint8_t> left_invertible(n, 0);
    for (Element a = 0; a < n; ++a) {
        for (Element v = 0; v < n && !left_invertible[a]; ++v) left_invertible[a] = ring.mul(v, a) == Ring::one();
    }
    std::vector<Element> rad;
    for (Element x = 0; x < n; ++x) {
        bool quasi_regular = true;
        for (Element r = 0; r < n && quasi_regular; ++r) {
            quasi_regular = left_invertible[ring.sub(Ring::one(), ring.mul(r, x))] != 0;
        }
        if (quasi_regular) rad.push_back(x);
    }
    return rad;
}

bool is_local(const Ring& ring) {
    const std::vector<Element> rad = radical(ring);
    return rad.size() + ring.units().size() == ring.size() &&
           std::none_of(rad.begin(), rad.end(), [&](Element x) { return ring.is_unit(x); });
}

std::vector<Element> socle_local(const Ring& ring) {
    if (!is_local(ring)) throw Error(Errc::not_local, ring.name() + " is not a local ring");
    const std::vector<Element> rad = radical(ring);
    std::vector<Element> soc;
    for (Element x = 0; x < ring.size(); ++x) {
        const bool kills = std::all_of(rad.begin(), rad.end(), [&](Element r) {
            return ring.mul(x, r) == Ring::zero() && ring.mul(r, x) == Ring::zero();
        });
        if (kills) soc.push_back(x);
    }
    return soc;
}

std::size_t residue_field_size(const Ring& ring) {
    if (!is_local(ring)) throw Error(Errc::not_local, ring.name() + " is not a local ring");
    return ring.size() / radical(ring).size();
}

std::size_t left_annihilator_size(const Ring& ring, std::span<const Element> word) {
    std::size_t count = 0;
    for (Element r = 0; r < ring.size(); ++r) {
        const bool kills = std::all_of(word.begin(), word.end(), [&](Element c) { return ring.mul(r, c) == Ring::zero(); });
        if (kills) ++count;
    }
    return count;
}

}  // namespace frobcode
