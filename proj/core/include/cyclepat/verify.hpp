#pragma once

#include <map>
#include <string>
#include <vector>

#include "cyclepat/numeric.hpp"

namespace cyclepat::verify {

struct CheckResult {
    int criterion = 0;  // acceptance criterion number; 0 = auxiliary invariant
    std::string name;
    bool pass = false;
    std::string detail;
};

struct Options {
    int oracle_n_max = 10;   // table oracle depth (12 with deep)
    int bijection_m_max = 8; // Dyck words of length <= 2m
    int formula_n_max = 12;  // 3m + r bound for the counting-formula arbitration
    int lemma_n231_max = 9;
    int lemma_n132_max = 10;
    bool deep = false;
    int threads = 1;
    std::string data_dir;  // empty: resolve via env / ./data / compiled-in source dir
};

/// suites: tables, lemmas, bijections, formula, conjecture, all.
std::vector<CheckResult> run_suite(const std::string& suite, const Options& opt);

std::vector<std::string> suite_names();

/// Resolution order: explicit dir, $CYCLEPAT_DATA_DIR, ./data, the source tree.
std::string locate_data_dir(const std::string& explicit_dir);

/// Rows of a bundled table file: label -> the twelve values.
std::map<std::string, std::vector<Int>> load_table_csv(const std::string& path);

/// Computed replica of tables 1-3 in the bundled CSV layout (oracle columns up
/// to n_max, generating-function columns beyond).
std::string computed_table_csv(int table_no, int n_max, int threads);

}  // namespace cyclepat::verify
