#include "eqcoho/lyndon.h"

#include <algorithm>

#include "eqcoho/errors.h"

namespace eqcoho {

Word::Word(std::string bits) : bits_(std::move(bits))
{
    if (bits_.empty())
        throw ArgumentError("word must be nonempty");
    if (bits_.find_first_not_of("01") != std::string::npos)
        throw ArgumentError("word must use only the letters 0 and 1");
}

bool is_lyndon(const Word& w)
{
    const auto& s = w.str();
    for (std::size_t r = 1; r < s.size(); ++r)
        if (s.substr(r) + s.substr(0, r) <= s)
            return false;
    return true;
}

LyndonTable lyndon_words(int d)
{
    if (d < 1)
        throw ArgumentError("Lyndon word length must be at least 1");
    LyndonTable table{d, {}};
    // Duval: successive Lyndon words of length <= d in lexicographic order.
    std::vector<int> w{-1};
    while (!w.empty()) {
        ++w.back();
        if (static_cast<int>(w.size()) == d) {
            std::string s;
            for (int c : w)
                s.push_back(static_cast<char>('0' + c));
            table.words.emplace_back(std::move(s));
        }
        const std::size_t m = w.size();
        while (static_cast<int>(w.size()) < d)
            w.push_back(w[w.size() - m]);
        while (!w.empty() && w.back() == 1)
            w.pop_back();
    }
    return table;
}

std::vector<std::uint64_t> divisors(std::uint64_t n)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d * d != n)
                out.push_back(n / d);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int mobius(std::uint64_t n)
{
    int sign = 1;
    for (std::uint64_t q = 2; q * q <= n; ++q) {
        if (n % q == 0) {
            n /= q;
            if (n % q == 0)
                return 0;
            sign = -sign;
        }
    }
    if (n > 1)
        sign = -sign;
    return sign;
}

std::uint64_t lyndon_count(int d)
{
    if (d < 1 || d > 62)
        throw ArgumentError("Lyndon word length must lie in [1, 62]");
    std::int64_t sum = 0;
    for (auto e : divisors(static_cast<std::uint64_t>(d)))
        sum += mobius(e) * (std::int64_t{1} << (static_cast<std::uint64_t>(d) / e));
    return static_cast<std::uint64_t>(sum / d);
}

std::uint64_t necklace_count(int m)
{
    if (m < 1)
        throw ArgumentError("necklace length must be at least 1");
    std::uint64_t total = 0;
    for (auto d : divisors(static_cast<std::uint64_t>(m)))
        total += lyndon_count(static_cast<int>(d));
    return total;
}

std::size_t zero_blocks(const Word& w)
{
    const auto& s = w.str();
    if (s.find('1') == std::string::npos)
        return 1;
    std::size_t blocks = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const char prev = s[(i + s.size() - 1) % s.size()];
        if (s[i] == '0' && prev == '1')
            ++blocks;
    }
    return blocks;
}

std::size_t iota(const Word& w)
{
    const auto& s = w.str();
    if (s.size() < 2)
        return 0;
    std::size_t count = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] == '0' && s[(i + 1) % s.size()] == '1')
            ++count;
    return count;
}

std::map<std::size_t, std::uint64_t> zero_block_histogram(int n)
{
    std::map<std::size_t, std::uint64_t> hist;
    for (auto& w : lyndon_words(n).words)
        ++hist[zero_blocks(w)];
    return hist;
}

std::uint64_t lyndon_count_with_zero_blocks(int n, int k)
{
    if (k < 0)
        throw ArgumentError("block count must be non-negative");
    auto hist = zero_block_histogram(n);
    auto it = hist.find(static_cast<std::size_t>(k));
    return it == hist.end() ? 0 : it->second;
}

std::uint64_t lyndon_plus_count(int n)
{
    // Equals l_n - L(n, 1) for n >= 2; at n = 1 the word "1" has no zero block.
    std::uint64_t count = 0;
    for (auto [blocks, words] : zero_block_histogram(n))
        if (blocks > 1)
            count += words;
    return count;
}

std::vector<std::uint64_t> divisors_with_p_cofactor(std::uint64_t n, std::uint64_t p)
{
    if (n == 0 || p == 0 || n % p != 0)
        throw DomainError("p = " + std::to_string(p) + " does not divide n = " + std::to_string(n));
    std::vector<std::uint64_t> out;
    for (auto d : divisors(n))
        if ((n / d) % p == 0)
            out.push_back(d);
    for (auto d : out)
        if ((n / p) % d != 0)
            throw InvariantViolation("D(n,p) element does not divide n/p");
    return out;
}

}  // namespace eqcoho
