#pragma once
// First-stage retriever: 1-2-gram tf-idf with smoothed idf and L2-normalized
// document vectors. Tokenization: lowercase, non-alphanumerics become
// spaces, split on whitespace; bigrams join consecutive tokens with one
// space. idf = ln((1+N)/(1+df)) + 1.

#include <map>
#include <string>
#include <vector>

#include "smartvector/types.hpp"

namespace smartvector {

class VectorStore;

std::vector<std::string> tokenize(const std::string& text);

// Unigrams + bigrams with raw counts.
std::map<std::string, int> term_counts(const std::string& text);

class TermIndex {
public:
    // Indexes every vector in the store and writes the normalized tf-idf
    // weights back into each SmartVector::term_vector.
    void build(VectorStore& store);

    std::size_t doc_count() const { return doc_count_; }
    std::size_t term_count() const { return df_.size(); }

    double idf(const std::string& term) const;

    // Cosine similarities of a query against every indexed vector that
    // shares at least one term. Deterministic accumulation order.
    std::map<std::string, double> query_scores(const std::string& query_text) const;

    // Cosine of two indexed vectors (dot of their normalized term vectors).
    double cosine(const std::string& id_a, const std::string& id_b) const;

private:
    struct Posting {
        std::string id;
        double weight = 0.0;  // normalized tf-idf
    };
    std::map<std::string, std::vector<Posting>> postings_;
    std::map<std::string, int> df_;
    std::map<std::string, const TermVector*> docs_;
    std::size_t doc_count_ = 0;
};

}  // namespace smartvector
