#pragma once

// Finite-alphabet symbol sequences: encoding of raw byte streams into
// validated symbol arrays, and concatenation of two sources into a single
// stream with a known change index.

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace creche {

/// How raw bytes map to symbol ids.
///   identity          — symbol id == byte value, alphabet size 256
///   dense_remap       — distinct bytes remapped (in byte order) to 0..k-1
///   lowercase_letters — keep only ASCII letters, lowercased, alphabet {a..z}
enum class EncodingPolicy { identity, dense_remap, lowercase_letters };

struct SymbolSequence {
    std::vector<std::uint16_t> symbols;
    std::uint32_t alphabet_size = 0;

    std::int64_t size() const { return static_cast<std::int64_t>(symbols.size()); }

    /// Validating constructor: every id must be < alphabet_size, n >= 1.
    static SymbolSequence from_symbols(std::vector<std::uint16_t> symbols,
                                       std::uint32_t alphabet_size);
};

SymbolSequence encode_bytes(std::string_view raw, EncodingPolicy policy);

/// Inverse of encode_bytes for the identity policy (alphabet must fit a byte).
std::string decode_bytes(const SymbolSequence& seq);

/// Joins two sequences over a shared alphabet universe. Returns the joined
/// sequence and the change index (== left.size()). The output alphabet size
/// is the larger of the two inputs'.
std::pair<SymbolSequence, std::int64_t> concatenate(const SymbolSequence& left,
                                                    const SymbolSequence& right);

EncodingPolicy parse_encoding_policy(std::string_view name);

} // namespace creche
