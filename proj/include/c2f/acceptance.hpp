#pragma once

#include "c2f/isotropy.hpp"

namespace c2f {

struct AcceptanceOptions {
    std::uint64_t seed = 20260810;
    int samples = 50;        // per-invariant higher-dimension samples (criterion 1)
    int fuzz_seconds = -1;   // -1: use C2F_FUZZ_SECONDS env var, else 600
    unsigned k = 1;          // base field GF(2^k)((t))
};

struct CriterionResult {
    int index = 0;
    std::string name;
    bool pass = false;
    std::string details;
    double seconds = 0.0;
};

/// Run the full acceptance suite; one result per criterion.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts);

/// The shipped fixed-seed division/symbol corpus (criterion 3): pairs (a, b)
/// over GF(2^k)((t)) with their symbol. Symbol-0 pairs are kept only when the
/// bound-6 search confirms a norm-form zero; rejections are counted.
struct SymbolCorpusEntry {
    FieldElem a, b;
    int symbol;
};
struct SymbolCorpus {
    std::vector<SymbolCorpusEntry> pairs;
    int rejected_unconfirmed_splits = 0;
};
SymbolCorpus make_symbol_corpus(const Field& f, size_t count, std::uint64_t seed, int bound);

} // namespace c2f
