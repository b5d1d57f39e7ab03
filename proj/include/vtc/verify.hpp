#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "vtc/cayley.hpp"
#include "vtc/exact.hpp"

namespace vtc {

struct CayleyHost {
  std::string name;
  CayleySpec spec;
  Digraph digraph;
};

/// Cyclic, product, dihedral and toroidal Cayley digraphs, 6 to 18 vertices.
std::vector<CayleyHost> small_cayley_corpus();

struct NamedDigraph {
  std::string name;
  Digraph digraph;
};

/// Hosts on at most 14 vertices whose cycle graphs have at most 64 vertices.
std::vector<NamedDigraph> stitching_hosts();

struct SuiteResult {
  std::string suite;
  std::string header;             // CSV header
  std::vector<std::string> rows;  // CSV rows, one per case
  std::size_t failures = 0;
  bool passed() const { return failures == 0; }
};

void write_suite_csv(std::ostream& out, const SuiteResult& r);

/// Every product with n1 n2 <= max_order: a Hamilton cycle implies the
/// gcd/split condition.
SuiteResult verify_trotter_erdos(std::size_t max_order, SearchBudget budget = {});

/// Every product with n1 n2 <= max_order: all cycle lengths divisible by
/// gcd(n1, n2), and the perimeter gap reaches the divisibility bound.
SuiteResult verify_divisibility(std::size_t max_order, unsigned threads = 1);

/// Gadget chains for k = 1..max_k and toroidal gadgets for n = 1..max_n.
SuiteResult verify_figure1(std::size_t max_k, std::size_t max_n, SearchBudget budget = {});

/// alpha >= 1/(3d) on each host.
SuiteResult verify_lemma21(const std::vector<CayleyHost>& corpus, unsigned threads = 1);

/// Path-extension cycle against ceil(alpha n / 3), with the runtime assertions live.
SuiteResult verify_dfs_cycle(const std::vector<CayleyHost>& corpus, unsigned threads = 1);

/// Long path against floor(sqrt(n) / 3).
SuiteResult verify_long_path(const std::vector<CayleyHost>& corpus);

/// Every induced cycle of length >= 4 in C(D) stitches to a directed cycle
/// of at least that length.
SuiteResult verify_lemma27(const std::vector<NamedDigraph>& hosts, SearchBudget budget = {},
                           unsigned threads = 1);

}  // namespace vtc
