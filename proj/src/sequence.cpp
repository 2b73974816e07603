#include "creche/sequence.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <stdexcept>

namespace creche {

SymbolSequence SymbolSequence::from_symbols(std::vector<std::uint16_t> symbols,
                                            std::uint32_t alphabet_size) {
    if (symbols.empty()) throw std::invalid_argument("SymbolSequence: empty symbol array");
    if (alphabet_size == 0) throw std::invalid_argument("SymbolSequence: alphabet_size must be positive");
    for (std::uint16_t s : symbols) {
        if (s >= alphabet_size)
            throw std::invalid_argument("SymbolSequence: symbol id outside declared alphabet");
    }
    return SymbolSequence{std::move(symbols), alphabet_size};
}

SymbolSequence encode_bytes(std::string_view raw, EncodingPolicy policy) {
    if (raw.empty()) throw std::invalid_argument("encode_bytes: empty input");

    std::vector<std::uint16_t> out;
    out.reserve(raw.size());

    switch (policy) {
    case EncodingPolicy::identity:
        for (unsigned char c : raw) out.push_back(c);
        return SymbolSequence{std::move(out), 256};

    case EncodingPolicy::dense_remap: {
        std::array<std::uint16_t, 256> id{};
        std::array<bool, 256> seen{};
        for (unsigned char c : raw) seen[c] = true;
        std::uint16_t next = 0;
        for (int c = 0; c < 256; ++c)
            if (seen[c]) id[c] = next++;
        for (unsigned char c : raw) out.push_back(id[c]);
        return SymbolSequence{std::move(out), next};
    }

    case EncodingPolicy::lowercase_letters:
        for (unsigned char c : raw) {
            if (std::isalpha(c)) out.push_back(static_cast<std::uint16_t>(std::tolower(c) - 'a'));
        }
        if (out.empty())
            throw std::invalid_argument("encode_bytes: no letters left after filtering");
        return SymbolSequence{std::move(out), 26};
    }
    throw std::logic_error("encode_bytes: unknown policy");
}

std::string decode_bytes(const SymbolSequence& seq) {
    if (seq.alphabet_size > 256)
        throw std::invalid_argument("decode_bytes: alphabet does not fit a byte");
    std::string raw;
    raw.reserve(seq.symbols.size());
    for (std::uint16_t s : seq.symbols) raw.push_back(static_cast<char>(s));
    return raw;
}

std::pair<SymbolSequence, std::int64_t> concatenate(const SymbolSequence& left,
                                                    const SymbolSequence& right) {
    if (left.symbols.empty() || right.symbols.empty())
        throw std::invalid_argument("concatenate: both inputs must be non-empty");
    std::vector<std::uint16_t> joined;
    joined.reserve(left.symbols.size() + right.symbols.size());
    joined.insert(joined.end(), left.symbols.begin(), left.symbols.end());
    joined.insert(joined.end(), right.symbols.begin(), right.symbols.end());
    const auto alphabet = std::max(left.alphabet_size, right.alphabet_size);
    return {SymbolSequence{std::move(joined), alphabet}, left.size()};
}

EncodingPolicy parse_encoding_policy(std::string_view name) {
    if (name == "identity") return EncodingPolicy::identity;
    if (name == "dense") return EncodingPolicy::dense_remap;
    if (name == "letters") return EncodingPolicy::lowercase_letters;
    throw std::invalid_argument("unknown encoding policy: " + std::string(name));
}

} // namespace creche
