#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

namespace docfreq {

using doc_id = std::uint32_t;

// Document id -> number of occurrences of the pattern in that document.
using doc_freq = std::map<doc_id, std::uint64_t>;

enum class errc {
    empty_manifest,
    sentinel_byte_in_input,
    unreadable_file,
    out_of_range,
    select_overflow,
    empty_range,
    invalid_pattern_byte,
    empty_pattern,
    doc_mismatch,
    empty_input,
    empty_interval,
    read_shorter_than_k,
    invalid_parameter,
    corrupt_container,
};

inline const char* errc_name(errc c) {
    switch (c) {
    case errc::empty_manifest: return "EmptyManifest";
    case errc::sentinel_byte_in_input: return "SentinelByteInInput";
    case errc::unreadable_file: return "UnreadableFile";
    case errc::out_of_range: return "OutOfRange";
    case errc::select_overflow: return "SelectOverflow";
    case errc::empty_range: return "EmptyRange";
    case errc::invalid_pattern_byte: return "InvalidPatternByte";
    case errc::empty_pattern: return "EmptyPattern";
    case errc::doc_mismatch: return "DocMismatch";
    case errc::empty_input: return "EmptyInput";
    case errc::empty_interval: return "EmptyInterval";
    case errc::read_shorter_than_k: return "ReadShorterThanK";
    case errc::invalid_parameter: return "InvalidParameter";
    case errc::corrupt_container: return "CorruptContainer";
    }
    return "Unknown";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

// Bytes 0x00 and 0x01 are reserved as sentinels.
inline constexpr unsigned char global_sentinel = 0x00;
inline constexpr unsigned char doc_sentinel = 0x01;

inline void check_pattern(std::string_view pattern) {
    if (pattern.empty())
        throw error(errc::empty_pattern, "pattern is empty");
    for (std::size_t i = 0; i < pattern.size(); ++i) {
        if (static_cast<unsigned char>(pattern[i]) <= doc_sentinel)
            throw error(errc::invalid_pattern_byte, "byte < 0x02 at offset " + std::to_string(i));
    }
}

}  // namespace docfreq
