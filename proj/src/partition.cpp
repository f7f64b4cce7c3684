#include "hookbasis/partition.hpp"

#include "hookbasis/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace hookbasis {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("partition needs at least one part");
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] == 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        n_ += parts_[i];
    }
}

Partition Partition::parse(std::string_view text) {
    std::vector<unsigned> parts;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (start == pos)
            throw std::invalid_argument("bad partition: \"" + std::string(text) + "\"");
        parts.push_back(
            static_cast<unsigned>(std::stoul(std::string(text.substr(start, pos - start)))));
        if (pos < text.size()) {
            if (text[pos] != ',')
                throw std::invalid_argument("bad partition: \"" + std::string(text) + "\"");
            ++pos;
            if (pos == text.size())
                throw std::invalid_argument("bad partition: trailing comma");
        }
    }
    if (parts.empty()) throw std::invalid_argument("empty partition");
    return Partition(std::move(parts));
}

std::string Partition::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

Partition Partition::conjugate() const {
    std::vector<unsigned> conj(parts_[0], 0);
    for (unsigned part : parts_)
        for (unsigned j = 0; j < part; ++j) ++conj[j];
    return Partition(std::move(conj));
}

bool Partition::is_hook() const {
    for (std::size_t i = 1; i < parts_.size(); ++i)
        if (parts_[i] != 1) return false;
    return true;
}

unsigned Partition::hook_arm() const {
    if (!is_hook()) throw std::invalid_argument("partition is not a hook");
    return parts_[0] - 1;
}

unsigned Partition::hook_leg() const {
    if (!is_hook()) throw std::invalid_argument("partition is not a hook");
    return static_cast<unsigned>(parts_.size()) - 1;
}

Partition hook_partition(unsigned K, unsigned L) {
    std::vector<unsigned> parts;
    parts.push_back(K + 1);
    parts.insert(parts.end(), L, 1u);
    return Partition(std::move(parts));
}

std::vector<Partition> partitions_of(unsigned n) {
    std::vector<Partition> out;
    std::vector<unsigned> current;
    // decreasing parts, largest first
    auto rec = [&](auto&& self, unsigned remaining, unsigned cap) -> void {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (unsigned part = std::min(cap, remaining); part >= 1; --part) {
            current.push_back(part);
            self(self, remaining - part, part);
            current.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

BiexponentList biexponents(const Partition& mu) {
    BiexponentList list;
    list.reserve(mu.n());
    const auto& parts = mu.parts();
    for (std::size_t row = 0; row < parts.size(); ++row)
        for (unsigned col = 0; col < parts[row]; ++col)
            list.push_back({static_cast<std::uint32_t>(row), col});
    std::sort(list.begin(), list.end());
    return list;
}

unsigned effective_delta_bound() { return effective_bound(default_delta_bound); }

Polynomial delta(const Partition& mu, unsigned max_n) {
    const unsigned n = mu.n();
    if (n > max_n)
        throw ResourceError("delta expansion bound exceeded: n = " + std::to_string(n) +
                            " > " + std::to_string(max_n));
    const BiexponentList be = biexponents(mu);

    Polynomial result(n);
    std::vector<std::uint32_t> perm(n);
    for (std::uint32_t i = 0; i < n; ++i) perm[i] = i;
    do {
        // parity by inversion count; n <= 8 keeps this cheap
        unsigned inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;

        Monomial m(n);
        for (std::size_t i = 0; i < n; ++i) {
            m.set_exp(Axis::X, i + 1, be[perm[i]].p);
            m.set_exp(Axis::Y, i + 1, be[perm[i]].q);
        }
        result.add_term(m, (inversions % 2 == 0) ? 1 : -1);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return result;
}

std::uint64_t nmu(const Partition& mu) {
    std::uint64_t total = 0;
    const auto& parts = mu.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) total += i * parts[i];
    return total;
}

std::uint64_t factorial(unsigned n) {
    if (n > 20) throw std::overflow_error("factorial overflows 64 bits");
    std::uint64_t r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        // exact at every step: r holds C(n-k+i-1, i-1) * ... pattern r = r*(n-k+i)/i
        std::uint64_t num = n - k + i;
        std::uint64_t g = r % i == 0 ? i : 1; // cheap pre-division
        if (g > 1) {
            r /= g;
            if (__builtin_mul_overflow(r, num, &r))
                throw std::overflow_error("binomial overflows 64 bits");
        } else {
            if (__builtin_mul_overflow(r, num, &r))
                throw std::overflow_error("binomial overflows 64 bits");
            r /= i;
        }
    }
    return r;
}

std::uint64_t factorial_quotient(const Partition& mu) {
    std::uint64_t q = factorial(mu.n());
    for (unsigned part : mu.parts()) q /= factorial(part);
    return q;
}

} // namespace hookbasis
