#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "collection.hpp"
#include "common.hpp"

namespace docfreq {

inline const std::string letters_alphabet = "abcdefghijklmnopqrstuvwxyz";
inline const std::string dna_alphabet = "ACGT";

struct concat_params {
    std::size_t d = 10;              // base documents
    std::size_t versions_total = 1000;
    double mutation = 0.01;          // per-symbol substitution probability
    std::size_t base_len = 1000;
    std::uint64_t seed = 1;
    std::string alphabet = letters_alphabet;
};

namespace detail {

inline char random_symbol(std::mt19937_64& rng, const std::string& alphabet) {
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    return alphabet[pick(rng)];
}

// Copy of base where each symbol is, with probability p, replaced by a
// different random symbol.
inline std::string mutate(std::mt19937_64& rng, const std::string& base, double p, const std::string& alphabet) {
    std::bernoulli_distribution hit(p);
    std::uniform_int_distribution<std::size_t> other(1, alphabet.size() - 1);
    std::string out = base;
    for (auto& c : out) {
        if (!hit(rng))
            continue;
        auto at = alphabet.find(c);
        c = alphabet[(at + other(rng)) % alphabet.size()];
    }
    return out;
}

inline void check_alphabet(const std::string& alphabet) {
    if (alphabet.size() < 2)
        throw error(errc::invalid_parameter, "alphabet needs at least two symbols");
    for (unsigned char c : alphabet)
        if (c <= doc_sentinel)
            throw error(errc::invalid_parameter, "alphabet contains a sentinel byte");
}

}  // namespace detail

// d documents, each a random base followed by versions_total / d mutated
// copies of it.
inline std::vector<std::string> gen_concat_docs(const concat_params& p) {
    if (p.d == 0 || p.base_len == 0 || !(p.mutation >= 0.0 && p.mutation <= 1.0))
        throw error(errc::invalid_parameter, "concat parameters");
    detail::check_alphabet(p.alphabet);
    std::mt19937_64 rng(p.seed);
    const std::size_t per_doc = p.versions_total / p.d;
    std::vector<std::string> docs;
    for (std::size_t k = 0; k < p.d; ++k) {
        std::string base(p.base_len, ' ');
        for (auto& c : base)
            c = detail::random_symbol(rng, p.alphabet);
        std::string doc = base;
        doc.reserve(p.base_len * (per_doc + 1));
        for (std::size_t v = 0; v < per_doc; ++v)
            doc += detail::mutate(rng, base, p.mutation, p.alphabet);
        docs.push_back(std::move(doc));
    }
    return docs;
}

inline collection gen_concat(const concat_params& p) { return collection(gen_concat_docs(p)); }

// Random substrings of length m of the documents; every pattern occurs.
inline std::vector<std::string> gen_patterns(const collection& coll, std::size_t m, std::size_t count,
                                             std::uint64_t seed) {
    std::size_t shortest = coll.doc(1).size();
    for (doc_id k = 2; k <= coll.t(); ++k)
        shortest = std::min(shortest, coll.doc(k).size());
    if (m == 0 || m > shortest)
        throw error(errc::invalid_parameter,
                    "pattern length " + std::to_string(m) + " vs shortest document " + std::to_string(shortest));
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<doc_id> doc(1, static_cast<doc_id>(coll.t()));
    std::vector<std::string> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const auto& d = coll.doc(doc(rng));
        std::uniform_int_distribution<std::size_t> at(0, d.size() - m);
        out.push_back(d.substr(at(rng), m));
    }
    return out;
}

struct strain_params {
    std::size_t species = 3;
    std::size_t strains = 10;
    std::size_t genome_len = 5000;
    double strain_mutation = 0.01;
    std::uint64_t seed = 1;
};

// One document per species: its strains, each a mutated copy of a random
// species genome, concatenated. strains_out[s][j] is strain j of species s.
inline std::vector<std::string> gen_strain_docs(const strain_params& p,
                                                std::vector<std::vector<std::string>>* strains_out = nullptr) {
    if (p.species == 0 || p.strains == 0 || p.genome_len == 0)
        throw error(errc::invalid_parameter, "strain parameters");
    std::mt19937_64 rng(p.seed);
    std::vector<std::string> docs;
    if (strains_out)
        strains_out->assign(p.species, {});
    for (std::size_t s = 0; s < p.species; ++s) {
        std::string genome(p.genome_len, ' ');
        for (auto& c : genome)
            c = detail::random_symbol(rng, dna_alphabet);
        std::string doc;
        for (std::size_t j = 0; j < p.strains; ++j) {
            auto strain = detail::mutate(rng, genome, p.strain_mutation, dna_alphabet);
            doc += strain;
            if (strains_out)
                (*strains_out)[s].push_back(std::move(strain));
        }
        docs.push_back(std::move(doc));
    }
    return docs;
}

struct sampled_read {
    std::string id;
    std::string seq;
    doc_id truth = 0;  // 0 for reads of random symbols
};

// Reads drawn from a random strain of a random species, with substitution
// noise.
inline std::vector<sampled_read> gen_reads(const std::vector<std::vector<std::string>>& strains,
                                           std::size_t count, std::size_t len, double noise,
                                           std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<sampled_read> out;
    std::uniform_int_distribution<std::size_t> species(0, strains.size() - 1);
    for (std::size_t i = 0; i < count; ++i) {
        auto s = species(rng);
        std::uniform_int_distribution<std::size_t> strain(0, strains[s].size() - 1);
        const auto& g = strains[s][strain(rng)];
        if (g.size() < len)
            throw error(errc::invalid_parameter, "read longer than genome");
        std::uniform_int_distribution<std::size_t> at(0, g.size() - len);
        auto seq = detail::mutate(rng, g.substr(at(rng), len), noise, dna_alphabet);
        out.push_back({"read" + std::to_string(i + 1), std::move(seq), static_cast<doc_id>(s + 1)});
    }
    return out;
}

inline std::vector<sampled_read> gen_random_reads(std::size_t count, std::size_t len, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<sampled_read> out;
    for (std::size_t i = 0; i < count; ++i) {
        std::string seq(len, ' ');
        for (auto& c : seq)
            c = detail::random_symbol(rng, dna_alphabet);
        out.push_back({"random" + std::to_string(i + 1), std::move(seq), 0});
    }
    return out;
}

}  // namespace docfreq
