#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <docfreq/bench.hpp>
#include <docfreq/doc_index.hpp>
#include <docfreq/fasta.hpp>
#include <docfreq/pseudoalign.hpp>
#include <docfreq/synthgen.hpp>

using namespace docfreq;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_ingest = 1;
constexpr int exit_io = 2;
constexpr int exit_usage = 64;

struct failure {
    int code;
    std::string message;
};

const std::vector<std::string> method_choices{"pdl", "gcda", "ilcp", "ilcp-star", "sada", "wt", "scan"};

std::vector<method> parse_methods(const std::vector<std::string>& names) {
    std::vector<method> out;
    for (const auto& s : names) {
        if (s == "all")
            return {all_methods.begin(), all_methods.end()};
        auto m = parse_method(s);
        if (std::find(out.begin(), out.end(), m) == out.end())
            out.push_back(m);
    }
    return out;
}

nlohmann::json stats_json(const doc_index& idx, std::size_t bytes) {
    const auto& s = idx.stats();
    nlohmann::json j;
    j["n"] = s.n;
    j["t"] = s.t;
    j["r"] = s.r;
    j["R"] = s.r_docs;
    j["nu"] = s.nu ? nlohmann::json(*s.nu) : nlohmann::json(nullptr);
    j["rho"] = s.rho;
    j["rho_star"] = s.rho_star;
    j["bytes"] = bytes;
    j["bits_per_symbol"] = 8.0 * static_cast<double>(bytes) / static_cast<double>(s.n);
    j["sa_provider"] = provider_name(idx.provider());
    auto& per = j["methods"];
    for (auto m : idx.methods())
        per[method_name(m)] = {{"bytes", idx.footprint_bytes(m)},
                               {"bits_per_symbol", 8.0 * static_cast<double>(idx.footprint_bytes(m)) /
                                                       static_cast<double>(s.n)}};
    return j;
}

doc_index open_index(const std::string& path) {
    try {
        return doc_index::open(path);
    } catch (const error& e) {
        throw failure{exit_io, e.what()};
    }
}

std::optional<method> optional_method(const std::string& name, const doc_index& idx) {
    if (name.empty())
        return std::nullopt;
    auto m = parse_method(name);
    if (!idx.has(m))
        throw failure{exit_usage, std::string("index was not built for method ") + name};
    return m;
}

int cmd_build(const std::string& input, const std::vector<std::string>& methods, const std::string& provider,
              const std::string& output, const std::string& format, std::size_t sampling) {
    build_options opt{parse_methods(methods), parse_provider(provider), sampling};
    collection coll({"x"});
    try {
        coll = ingest(read_manifest(input), format == "fasta" ? input_format::fasta : input_format::plain);
    } catch (const error& e) {
        throw failure{exit_ingest, e.what()};
    }
    auto idx = doc_index::build(std::move(coll), opt);
    auto bytes = idx.serialize();
    std::ofstream f(output, std::ios::binary);
    f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!f)
        throw failure{exit_io, "cannot write " + output};
    std::cout << stats_json(idx, bytes.size()).dump(2) << '\n';
    return exit_ok;
}

int cmd_query(const std::string& index, const std::string& patterns, const std::string& via) {
    auto idx = open_index(index);
    auto m = optional_method(via, idx).value_or(idx.default_method());
    std::string text;
    try {
        text = read_file(patterns);
    } catch (const error& e) {
        throw failure{exit_io, e.what()};
    }
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        try {
            for (auto [d, f] : idx.query(m, line))
                std::cout << line << '\t' << d << '\t' << f << '\n';
        } catch (const error& e) {
            if (e.code() != errc::empty_pattern && e.code() != errc::invalid_pattern_byte)
                throw;
            std::cerr << "warning: line " << lineno << " skipped: " << e.what() << '\n';
        }
    }
    return exit_ok;
}

std::string doc_list(const assignment& a) {
    if (a.docs.empty())
        return "-";
    std::string s;
    for (auto d : a.docs)
        s += (s.empty() ? "" : ",") + std::to_string(d);
    return s;
}

std::string evidence(const assignment& a, bool kmer) {
    if (kmer) {
        std::string s = "kmers=" + std::to_string(a.kmer_hits) + "/" + std::to_string(a.kmers);
        if (a.n_kmers)
            s += ";n_kmers=" + std::to_string(a.n_kmers);
        return s;
    }
    std::string s;
    for (const auto& seg : a.segments) {
        if (seg.freqs.empty())
            continue;
        if (!s.empty())
            s += ';';
        s += (seg.reverse ? "rc:" : "") + std::to_string(seg.begin) + "-" + std::to_string(seg.end) + ":";
        bool first = true;
        for (auto [d, f] : seg.freqs) {
            s += (first ? "" : ",") + std::to_string(d) + "=" + std::to_string(f);
            first = false;
        }
    }
    return s.empty() ? "-" : s;
}

int cmd_pseudoalign(const std::string& index, const std::string& reads, std::size_t k, const std::string& criterion,
                    bool rc, const std::string& via) {
    auto idx = open_index(index);
    assign_options opt;
    opt.k = k;
    opt.rc = rc;
    opt.via = optional_method(via, idx);
    std::vector<fasta_record> records;
    try {
        records = read_fasta(reads);
    } catch (const error& e) {
        throw failure{exit_io, e.what()};
    }
    const bool kmer = criterion == "kmer";
    for (const auto& r : records) {
        try {
            auto a = kmer ? kmer_assign(idx, r.seq, opt) : maxrun_assign(idx, r.seq, opt);
            std::cout << r.id << '\t' << status_name(a.status) << '\t' << doc_list(a) << '\t' << evidence(a, kmer)
                      << '\t' << (a.n_kmers ? "HAS_N" : "-") << '\n';
        } catch (const error& e) {
            if (e.code() != errc::read_shorter_than_k)
                throw;
            std::cout << r.id << "\tUNASSIGNED\t-\t-\tREAD_SHORTER_THAN_K\n";
        }
    }
    return exit_ok;
}

// key=value pairs separated by commas; pattern lengths separated by ':'.
bench_config parse_gen(const std::string& spec) {
    bench_config cfg;
    std::istringstream in(spec);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty())
            continue;
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw failure{exit_usage, "--gen expects key=value, got '" + item + "'"};
        auto key = item.substr(0, eq), value = item.substr(eq + 1);
        try {
            if (key == "d")
                cfg.gen.d = std::stoul(value);
            else if (key == "R")
                cfg.gen.mutation = std::stod(value);
            else if (key == "versions")
                cfg.gen.versions_total = std::stoul(value);
            else if (key == "base_len")
                cfg.gen.base_len = std::stoul(value);
            else if (key == "seed")
                cfg.gen.seed = std::stoull(value);
            else if (key == "patterns")
                cfg.patterns = std::stoul(value);
            else if (key == "alphabet")
                cfg.gen.alphabet = value == "dna" ? dna_alphabet : letters_alphabet;
            else if (key == "m") {
                cfg.pattern_lengths.clear();
                std::istringstream ms(value);
                std::string part;
                while (std::getline(ms, part, ':'))
                    cfg.pattern_lengths.push_back(std::stoul(part));
            } else
                throw failure{exit_usage, "unknown --gen key '" + key + "'"};
        } catch (const std::logic_error&) {
            throw failure{exit_usage, "bad value for --gen key '" + key + "'"};
        }
    }
    return cfg;
}

int cmd_bench(const std::string& gen, const std::vector<std::string>& methods, std::size_t reps,
              const std::string& provider) {
    auto cfg = parse_gen(gen);
    cfg.methods = parse_methods(methods);
    cfg.reps = reps;
    cfg.provider = parse_provider(provider);
    write_bench_csv(std::cout, run_bench(cfg));
    return exit_ok;
}

int cmd_gen(const std::string& dir, const concat_params& p, std::size_t patterns, std::size_t m) {
    auto docs = gen_concat_docs(p);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    auto write = [&](const std::filesystem::path& path, const std::string& body) {
        std::ofstream f(path, std::ios::binary);
        f << body;
        if (!f)
            throw failure{exit_io, "cannot write " + path.string()};
    };
    std::string manifest;
    for (std::size_t k = 0; k < docs.size(); ++k) {
        auto name = "doc" + std::to_string(k + 1) + ".txt";
        write(std::filesystem::path(dir) / name, docs[k]);
        manifest += name + "\n";
    }
    write(std::filesystem::path(dir) / "manifest.txt", manifest);
    if (patterns > 0) {
        std::string body;
        for (const auto& s : gen_patterns(collection(std::move(docs)), m, patterns, p.seed + 1))
            body += s + "\n";
        write(std::filesystem::path(dir) / "patterns.txt", body);
    }
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Document listing with frequencies over repetitive collections"};
    app.require_subcommand(1);

    std::string input, output, provider = "grammar-diff", format = "plain", index, patterns, reads, via;
    std::string criterion = "kmer", gen_spec, gen_dir, alphabet = "letters";
    std::vector<std::string> methods;
    std::size_t sampling = 0, k = 31, reps = 1, gen_patterns_n = 0, gen_m = 8;
    bool rc = false;
    concat_params gp;

    auto* build = app.add_subcommand("build", "Index a collection");
    build->add_option("--input", input, "Manifest listing one document file per line")->required();
    build->add_option("--method", methods, "Methods to build; the first answers queries by default")
        ->required()
        ->delimiter(',')
        ->check(CLI::IsMember(method_choices));
    build->add_option("--sa-provider", provider)->check(CLI::IsMember({"plain", "grammar-diff"}));
    build->add_option("--output", output)->required();
    build->add_option("--format", format, "Document file format")->check(CLI::IsMember({"plain", "fasta"}));
    build->add_option("--pdl-sampling", sampling, "Store lists only for symbols at least this long");

    auto* query = app.add_subcommand("query", "Document frequencies of patterns");
    query->add_option("--index", index)->required();
    query->add_option("--patterns", patterns, "One pattern per line")->required();
    query->add_option("--method", via)->check(CLI::IsMember(method_choices));

    auto* pseudo = app.add_subcommand("pseudoalign", "Assign reads to documents");
    pseudo->add_option("--index", index)->required();
    pseudo->add_option("--reads", reads, "FASTA reads")->required();
    pseudo->add_option("-k", k)->required()->check(CLI::PositiveNumber);
    pseudo->add_option("--criterion", criterion)->check(CLI::IsMember({"kmer", "maxrun"}));
    pseudo->add_flag("--rc", rc, "Also query the reverse complement");
    pseudo->add_option("--method", via)->check(CLI::IsMember(method_choices));

    auto* bench = app.add_subcommand("bench", "Time all methods on a generated collection");
    bench->add_option("--gen", gen_spec, "d=,R=,versions=,base_len=,seed=,patterns=,m=8:12:16,alphabet=");
    bench->add_option("--methods", methods)->delimiter(',')->check(CLI::IsMember([] {
        auto v = method_choices;
        v.push_back("all");
        return v;
    }()));
    bench->add_option("--reps", reps)->check(CLI::PositiveNumber);
    bench->add_option("--sa-provider", provider)->check(CLI::IsMember({"plain", "grammar-diff"}));

    auto* gen = app.add_subcommand("gen", "Write a synthetic versioned collection");
    gen->add_option("--output-dir", gen_dir)->required();
    gen->add_option("--d", gp.d);
    gen->add_option("--versions", gp.versions_total);
    gen->add_option("-R,--mutation", gp.mutation)->check(CLI::Range(0.0, 1.0));
    gen->add_option("--base-len", gp.base_len)->check(CLI::PositiveNumber);
    gen->add_option("--seed", gp.seed);
    gen->add_option("--alphabet", alphabet)->check(CLI::IsMember({"letters", "dna"}));
    gen->add_option("--patterns", gen_patterns_n, "Also write this many patterns");
    gen->add_option("--pattern-length", gen_m);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*build)
            return cmd_build(input, methods, provider, output, format, sampling);
        if (*query)
            return cmd_query(index, patterns, via);
        if (*pseudo)
            return cmd_pseudoalign(index, reads, k, criterion, rc, via);
        if (*bench)
            return cmd_bench(gen_spec, methods.empty() ? std::vector<std::string>{"all"} : methods, reps, provider);
        if (*gen) {
            gp.alphabet = alphabet == "dna" ? dna_alphabet : letters_alphabet;
            return cmd_gen(gen_dir, gp, gen_patterns_n, gen_m);
        }
    } catch (const failure& f) {
        std::cerr << "error: " << f.message << '\n';
        return f.code;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << '\n';
        switch (e.code()) {
        case errc::invalid_parameter: return exit_usage;
        case errc::unreadable_file:
        case errc::corrupt_container: return exit_io;
        default: return exit_ingest;
        }
    }
    return exit_usage;
}
