// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "frobcode/lincode.hpp"

#include <algorithm>
#include <cstring>

#include "frobcode/error.hpp"

namespace frobcode {

namespace {

std::string word_key(std::span<const Element> w) {
    std::string key(w.size() * sizeof(Element), '\0');
    if (!w.empty()) std::memcpy(key.data(), w.data(), key.size());
    return key;
}

// Ordered, deduplicated word list under construction.
class WordList {
public:
    explicit WordList(std::size_t length) : length_(length) {}

    bool insert(std::span<const Element> w) {
        if (!index_.emplace(word_key(w), count_).second) return false;
        words_.insert(words_.end(), w.begin(), w.end());
        ++count_;
        return true;
    }
    bool contains(std::span<const Element> w) const { return index_.contains(word_key(w)); }
    std::size_t count() const { return count_; }
    std::span<const Element> word(std::size_t i) const { return {words_.data() + i * length_, length_}; }
    std::vector<Element> release() { return std::move(words_); }

private:
    std::size_t length_;
    std::size_t count_ = 0;
    std::vector<Element> words_;
    std::unordered_map<std::string, std::size_t> index_;
};

// Greedy generating set: scan words in order, keep each one not yet in the
// span of those kept so far.
Matrix greedy_generators(const Ring& ring, std::size_t length, const std::vector<Element>& flat, std::size_t count) {
    Matrix gens;
    WordList span(length);
    span.insert(Word(length, Ring::zero()));
    Word tmp(length);
    for (std::size_t i = 0; i < count; ++i) {
        std::span<const Element> w{flat.data() + i * length, length};
        if (span.contains(w)) continue;
        gens.emplace_back(w.begin(), w.end());
        const std::size_t before = span.count();
        for (std::size_t s = 0; s < before; ++s) {
            for (Element r = 0; r < ring.size(); ++r) {
                const auto base = span.word(s);
                for (std::size_t j = 0; j < length; ++j) tmp[j] = ring.add(base[j], ring.mul(r, w[j]));
                span.insert(tmp);
            }
        }
    }
    return gens;
}

}  // namespace

LinearCode::LinearCode(WeightTablePtr weights, std::size_t length, Matrix generators, std::vector<Element> flat_words)
    : weights_(std::move(weights)), length_(length), generators_(std::move(generators)), words_(std::move(flat_words)) {
    if (length_ == 0) {
        word_count_ = 1;
        words_.clear();
    } else {
        if (words_.size() % length_ != 0) throw Error(Errc::dimension_mismatch, "word buffer is not a multiple of the length");
        word_count_ = words_.size() / length_;
    }
    const Ring& r = ring();
    support_mask_.assign(length_, 0);
    scaled_weight_.reserve(word_count_);
    hamming_.reserve(word_count_);
    for (std::size_t i = 0; i < word_count_; ++i) {
        const auto w = word(i);
        if (!index_.emplace(word_key(w), i).second) throw Error(Errc::internal, "duplicate word in code");
        std::size_t h = 0;
        for (std::size_t j = 0; j < length_; ++j) {
            if (w[j] >= r.size()) throw Error(Errc::dimension_mismatch, "word entry outside the ring");
            if (w[j] != Ring::zero()) {
                ++h;
                support_mask_[j] = 1;
            }
        }
        hamming_.push_back(h);
        scaled_weight_.push_back(weights_->scaled_word(w));
        if (h > 0) {
            if (!min_hamming_ || h < *min_hamming_) min_hamming_ = h;
            if (!min_scaled_weight_ || scaled_weight_.back() < *min_scaled_weight_) min_scaled_weight_ = scaled_weight_.back();
        }
    }
    if (!contains(Word(length_, Ring::zero()))) throw Error(Errc::internal, "code does not contain the zero word");
    support_size_ = static_cast<std::size_t>(std::count(support_mask_.begin(), support_mask_.end(), 1));
}

std::optional<std::size_t> LinearCode::find(std::span<const Element> w) const {
    if (w.size() != length_) return std::nullopt;
    if (auto it = index_.find(word_key(w)); it != index_.end()) return it->second;
    return std::nullopt;
}

Positions LinearCode::support() const {
    Positions p;
    for (std::size_t j = 0; j < length_; ++j) {
        if (support_mask_[j]) p.push_back(j);
    }
    return p;
}

std::optional<Rational> LinearCode::min_hom_norm() const {
    if (!min_scaled_weight_) return std::nullopt;
    return Rational(*min_scaled_weight_, weights_->scale());
}

LinearCode build_code(WeightTablePtr weights, const Matrix& generators, std::uint64_t message_cap) {
    const std::size_t length = generators.empty() ? 0 : generators.front().size();
    return build_code(std::move(weights), length, generators, message_cap);
}

LinearCode build_code(WeightTablePtr weights, std::size_t length, const Matrix& generators, std::uint64_t message_cap) {
    const Ring& r = weights->ring();
    for (const Word& row : generators) {
        if (row.size() != length) throw Error(Errc::dimension_mismatch, "generator rows have inconsistent lengths");
        for (Element e : row) {
            if (e >= r.size()) throw Error(Errc::dimension_mismatch, "generator entry outside the ring");
        }
    }
    const std::size_t k = generators.size();
    std::uint64_t messages = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (messages > message_cap / r.size()) {
            throw Error(Errc::cap_exceeded, "message space |R|^k exceeds the enumeration cap of " + std::to_string(message_cap));
        }
        messages *= r.size();
    }
    WordList list(length);
    std::vector<Element> msg(k, Ring::zero());
    Word w(length);
    for (std::uint64_t m = 0; m < messages; ++m) {
        std::fill(w.begin(), w.end(), Ring::zero());
        for (std::size_t i = 0; i < k; ++i) {
            if (msg[i] == Ring::zero()) continue;
            for (std::size_t j = 0; j < length; ++j) w[j] = r.add(w[j], r.mul(msg[i], generators[i][j]));
        }
        list.insert(w);
        // odometer; the last message coordinate runs fastest
        for (std::size_t i = k; i-- > 0;) {
            if (++msg[i] < r.size()) break;
            msg[i] = 0;
        }
    }
    return LinearCode(std::move(weights), length, generators, list.release());
}

Positions support(std::span<const Element> word) {
    Positions p;
    for (std::size_t j = 0; j < word.size(); ++j) {
        if (word[j] != Ring::zero()) p.push_back(j);
    }
    return p;
}

std::size_t ell(std::span<const Element> word) {
    return static_cast<std::size_t>(std::count_if(word.begin(), word.end(), [](Element e) { return e != Ring::zero(); }));
}

LinearCode shorten(const LinearCode& code, const Positions& positions, bool compact) {
    const std::size_t n = code.length();
    std::vector<std::uint8_t> inside(n, 0);
    for (std::size_t p : positions) {
        if (p >= n) throw Error(Errc::dimension_mismatch, "shortening position out of range");
        inside[p] = 1;
    }
    const std::size_t out_len = compact ? static_cast<std::size_t>(std::count(inside.begin(), inside.end(), 1)) : n;
    std::vector<Element> flat;
    std::size_t count = 0;
    for (std::size_t i = 0; i < code.size(); ++i) {
        const auto w = code.word(i);
        bool ok = true;
        for (std::size_t j = 0; j < n && ok; ++j) ok = inside[j] || w[j] == Ring::zero();
        if (!ok) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (!compact || inside[j]) flat.push_back(w[j]);
        }
        ++count;
    }
    Matrix gens = greedy_generators(code.ring(), out_len, flat, count);
    return LinearCode(code.weights_ptr(), out_len, std::move(gens), std::move(flat));
}

LinearCode shorten(const LinearCode& code, std::span<const Element> word, bool compact) {
    return shorten(code, support(word), compact);
}

LinearCode residual(const LinearCode& code, const Positions& positions) {
    const std::size_t n = code.length();
    std::vector<std::uint8_t> removed(n, 0);
    for (std::size_t p : positions) {
        if (p >= n) throw Error(Errc::dimension_mismatch, "residual position out of range");
        removed[p] = 1;
    }
    Positions kept;
    for (std::size_t j = 0; j < n; ++j) {
        if (!removed[j]) kept.push_back(j);
    }
    auto project = [&](std::span<const Element> w) {
        Word out;
        out.reserve(kept.size());
        for (std::size_t j : kept) out.push_back(w[j]);
        return out;
    };
    WordList list(kept.size());
    for (std::size_t i = 0; i < code.size(); ++i) list.insert(project(code.word(i)));
    Matrix gens;
    for (const Word& row : code.generators()) gens.push_back(project(row));
    return LinearCode(code.weights_ptr(), kept.size(), std::move(gens), list.release());
}

LinearCode residual(const LinearCode& code, std::span<const Element> word) { return residual(code, support(word)); }

Rational coset_average(const LinearCode& code, std::span<const Element> x) {
    if (x.size() != code.length()) throw Error(Errc::dimension_mismatch, "coset representative has the wrong length");
    const Ring& r = code.ring();
    const HomWeightTable& t = code.weights();
    std::int64_t total = 0;
    for (std::size_t i = 0; i < code.size(); ++i) {
        const auto c = code.word(i);
        for (std::size_t j = 0; j < x.size(); ++j) total += t.scaled(r.add(x[j], c[j]));
    }
    return Rational(total, t.scale()) / Rational(static_cast<std::int64_t>(code.size()));
}

Rational coset_average_closed_form(const LinearCode& code, std::span<const Element> x) {
    if (x.size() != code.length()) throw Error(Errc::dimension_mismatch, "coset representative has the wrong length");
    Rational value(static_cast<std::int64_t>(code.support_size()));
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (!code.in_support(j)) value += code.weights().normalized(x[j]);
    }
    return value;
}

CyclicSubmodule left_multiples(const Ring& ring, std::span<const Element> word) {
    CyclicSubmodule sub{Word(word.begin(), word.end()), {}};
    WordList list(word.size());
    Word tmp(word.size());
    for (Element r = 0; r < ring.size(); ++r) {
        for (std::size_t j = 0; j < word.size(); ++j) tmp[j] = ring.mul(r, word[j]);
        if (list.insert(tmp)) sub.members.push_back(tmp);
    }
    return sub;
}

CyclicSubmodule cyclic_submodule(const LinearCode& code, std::span<const Element> word) {
    if (!code.contains(word)) throw Error(Errc::not_in_code, "word is not a codeword");
    return left_multiples(code.ring(), word);
}

std::size_t cyclic_size(const Ring& ring, std::span<const Element> word) {
    return ring.size() / left_annihilator_size(ring, word);
}

MinHammingStructure min_hamming_word_structure(const LinearCode& code, std::span<const Element> word) {
    if (!code.contains(word)) throw Error(Errc::structure_violation, "word is not a codeword");
    const std::size_t h = ell(word);
    if (h == 0 || !code.min_hamming() || h != *code.min_hamming()) {
        throw Error(Errc::structure_violation, "word does not attain the minimum Hamming weight");
    }
    const Ring& r = code.ring();
    const Positions supp = support(word);
    for (Element alpha = 1; alpha < r.size(); ++alpha) {
        MinHammingStructure s{alpha, {}};
        for (std::size_t j : supp) {
            const auto& units = r.units();
            const auto it = std::find_if(units.begin(), units.end(), [&](Element u) { return r.mul(alpha, u) == word[j]; });
            if (it == units.end()) break;
            s.units.emplace_back(j, *it);
        }
        if (s.units.size() != supp.size()) continue;
        const Element single[] = {alpha};
        if (cyclic_size(r, word) != cyclic_size(r, single)) {
            throw Error(Errc::structure_violation, "|Rc| differs from |R alpha|");
        }
        return s;
    }
    throw Error(Errc::structure_violation, "no alpha with c_i = alpha u_i exists");
}

bool cyclic_submodule_is_simple(const LinearCode& code, std::span<const Element> word) {
    const Ring& r = code.ring();
    const std::size_t full = cyclic_size(r, word);
    const CyclicSubmodule sub = left_multiples(r, word);
    return std::all_of(sub.members.begin(), sub.members.end(), [&](const Word& m) {
        return ell(m) == 0 || (code.contains(m) && cyclic_size(r, m) == full);
    });
}

}  // namespace frobcode
