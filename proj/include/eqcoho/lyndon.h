#pragma once

// Binary Lyndon words and necklaces.

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace eqcoho {

/// Nonempty word over {0, 1}.
class Word {
public:
    explicit Word(std::string bits);

    const std::string& str() const { return bits_; }
    std::size_t size() const { return bits_.size(); }
    char operator[](std::size_t i) const { return bits_[i]; }

    auto operator<=>(const Word&) const = default;

private:
    std::string bits_;
};

/// True when w is strictly smaller than each of its nontrivial rotations.
/// Length-1 words qualify.
bool is_lyndon(const Word& w);

struct LyndonTable {
    int length;
    std::vector<Word> words;  ///< lexicographically sorted
};

/// Lyndon words of length d, generated by Duval's algorithm.
LyndonTable lyndon_words(int d);

std::vector<std::uint64_t> divisors(std::uint64_t n);
int mobius(std::uint64_t n);

/// (1/d) sum_{e | d} mu(e) 2^(d/e).
std::uint64_t lyndon_count(int d);
/// Rotation orbits on {0,1}^m, i.e. sum_{d | m} lyndon_count(d).
std::uint64_t necklace_count(int m);

/// Maximal cyclic runs of '0'. The all-zero word counts as one block.
std::size_t zero_blocks(const Word& w);
/// Cyclic occurrences of "01".
std::size_t iota(const Word& w);

/// Number of Lyndon words of length n with exactly k blocks of zeros.
std::uint64_t lyndon_count_with_zero_blocks(int n, int k);
/// Histogram k -> count over the Lyndon words of length n.
std::map<std::size_t, std::uint64_t> zero_block_histogram(int n);
/// Lyndon words of length n with more than one block of zeros; equal to
/// lyndon_count(n) - lyndon_count_with_zero_blocks(n, 1) for n >= 2.
std::uint64_t lyndon_plus_count(int n);

/// { d : d | n and p | n/d }, sorted. Throws DomainError unless p | n.
std::vector<std::uint64_t> divisors_with_p_cofactor(std::uint64_t n, std::uint64_t p);

}  // namespace eqcoho
