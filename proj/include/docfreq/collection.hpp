#pragma once

#include <algorithm>
#include <array>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "binary_io.hpp"
#include "bit_vector.hpp"
#include "common.hpp"
#include "fasta.hpp"

namespace docfreq {

enum class input_format { plain, fasta };

// Ordered documents plus their concatenation T_1 0x01 T_2 0x01 ... T_t 0x01 0x00.
// Global positions are 1-based; local positions are 1-based inside T_k 0x01.
class collection {
public:
    collection() = default;

    explicit collection(std::vector<std::string> docs) : docs_(std::move(docs)) {
        if (docs_.empty())
            throw error(errc::empty_manifest, "no documents");
        for (std::size_t k = 0; k < docs_.size(); ++k) {
            if (docs_[k].empty())
                throw error(errc::empty_input, "document " + std::to_string(k + 1) + " is empty");
            for (std::size_t i = 0; i < docs_[k].size(); ++i)
                if (static_cast<unsigned char>(docs_[k][i]) <= doc_sentinel)
                    throw error(errc::sentinel_byte_in_input,
                                "document " + std::to_string(k + 1) + " offset " + std::to_string(i));
        }
        std::size_t total = 1;
        for (const auto& d : docs_)
            total += d.size() + 1;
        concat_.reserve(total);
        starts_.reserve(docs_.size());
        for (const auto& d : docs_) {
            starts_.push_back(concat_.size() + 1);
            concat_ += d;
            concat_.push_back(static_cast<char>(doc_sentinel));
        }
        concat_.push_back(static_cast<char>(global_sentinel));

        std::array<bool, 256> seen{};
        for (unsigned char c : concat_)
            seen[c] = true;
        sigma_ = static_cast<std::size_t>(std::count(seen.begin(), seen.end(), true));
        boundary_ = bit_vector::from_positions(concat_.size(), starts_);
    }

    std::size_t t() const { return docs_.size(); }
    std::size_t n() const { return concat_.size(); }
    std::size_t sigma() const { return sigma_; }
    const std::string& concat() const { return concat_; }
    const std::vector<std::string>& docs() const { return docs_; }
    const std::string& doc(doc_id k) const { return docs_.at(k - 1); }
    const std::vector<std::size_t>& doc_starts() const { return starts_; }
    const bit_vector& boundary() const { return boundary_; }

    // doc_of(n) is t: the global sentinel belongs to the last document.
    doc_id doc_of(std::size_t global_pos) const {
        if (global_pos < 1 || global_pos > n())
            throw error(errc::out_of_range, "global position " + std::to_string(global_pos));
        return static_cast<doc_id>(boundary_.rank1(global_pos));
    }

    std::pair<doc_id, std::size_t> to_local(std::size_t global_pos) const {
        if (global_pos < 1 || global_pos >= n())
            throw error(errc::out_of_range, "global position " + std::to_string(global_pos));
        doc_id k = doc_of(global_pos);
        return {k, global_pos - starts_[k - 1] + 1};
    }

    std::size_t to_global(doc_id k, std::size_t local) const {
        if (k < 1 || k > t() || local < 1 || local > docs_[k - 1].size() + 1)
            throw error(errc::out_of_range,
                        "local position (" + std::to_string(k) + ", " + std::to_string(local) + ")");
        return starts_[k - 1] + local - 1;
    }

    // T_k followed by its sentinel
    std::string local_text(doc_id k) const { return doc(k) + static_cast<char>(doc_sentinel); }

    void serialize(byte_writer& out) const {
        out.put<std::uint32_t>(static_cast<std::uint32_t>(docs_.size()));
        for (const auto& d : docs_)
            out.put_string(d);
    }

    static collection load(byte_reader& in) {
        auto t = in.get<std::uint32_t>();
        std::vector<std::string> docs;
        for (std::uint32_t k = 0; k < t; ++k)
            docs.push_back(in.get_string());
        try {
            return collection(std::move(docs));
        } catch (const error& e) {
            throw error(errc::corrupt_container, e.what());
        }
    }

private:
    std::vector<std::string> docs_;
    std::string concat_;
    std::vector<std::size_t> starts_;
    std::size_t sigma_ = 0;
    bit_vector boundary_;
};

// One path per line; '#' starts a comment; relative paths resolve against the
// manifest's directory.
inline std::vector<std::string> read_manifest(const std::string& manifest_path) {
    auto text = read_file(manifest_path);
    auto base = std::filesystem::path(manifest_path).parent_path();
    std::vector<std::string> paths;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        std::string line = text.substr(pos, nl == std::string::npos ? std::string::npos : nl - pos);
        pos = nl == std::string::npos ? text.size() + 1 : nl + 1;
        if (auto h = line.find('#'); h != std::string::npos)
            line.erase(h);
        auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos)
            continue;
        auto e = line.find_last_not_of(" \t\r");
        std::filesystem::path p = line.substr(b, e - b + 1);
        paths.push_back(p.is_absolute() ? p.string() : (base / p).string());
    }
    return paths;
}

inline collection ingest(const std::vector<std::string>& paths, input_format format) {
    if (paths.empty())
        throw error(errc::empty_manifest, "manifest lists no files");
    std::vector<std::string> docs;
    for (const auto& path : paths) {
        auto body = read_file(path);
        if (format == input_format::fasta) {
            std::string seq;
            for (auto& rec : parse_fasta(body))
                seq += rec.seq;
            body = std::move(seq);
        }
        for (std::size_t i = 0; i < body.size(); ++i)
            if (static_cast<unsigned char>(body[i]) <= doc_sentinel)
                throw error(errc::sentinel_byte_in_input, path + " offset " + std::to_string(i));
        if (body.empty())
            throw error(errc::empty_input, path + " has no content");
        docs.push_back(std::move(body));
    }
    return collection(std::move(docs));
}

}  // namespace docfreq
