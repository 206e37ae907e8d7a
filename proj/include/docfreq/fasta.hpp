#pragma once

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "common.hpp"

namespace docfreq {

struct fasta_record {
    std::string id;  // header up to the first whitespace, without '>'
    std::string seq;
};

inline std::vector<fasta_record> parse_fasta(const std::string& text) {
    std::vector<fasta_record> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        if (line[0] == '>') {
            auto end = line.find_first_of(" \t", 1);
            out.push_back({line.substr(1, end == std::string::npos ? std::string::npos : end - 1), {}});
            continue;
        }
        if (out.empty())
            out.push_back({"", {}});
        for (char c : line) {
            if (std::isspace(static_cast<unsigned char>(c)))
                continue;
            out.back().seq.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
        }
    }
    return out;
}

inline std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw error(errc::unreadable_file, path);
    std::ostringstream ss;
    ss << f.rdbuf();
    if (f.bad())
        throw error(errc::unreadable_file, path);
    return ss.str();
}

inline std::vector<fasta_record> read_fasta(const std::string& path) { return parse_fasta(read_file(path)); }

}  // namespace docfreq
