#pragma once

// Cross-checks against OEIS b-files: the two-column "n a(n)" text format.

#include <gmpxx.h>

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qsv::oeis {

struct BFileEntry {
  long index;
  mpz_class value;
};

struct BFile {
  std::string id;  // "A228441", may be empty
  std::vector<BFileEntry> entries;

  std::optional<mpz_class> at(long index) const;
};

// Comment lines start with '#'; blank lines are skipped. Malformed lines
// and non-increasing indices raise parse-error naming the line.
BFile parse_bfile(std::string_view text, std::string id = {});
BFile load_bfile(const std::filesystem::path& path, std::string id = {});

using LocalSequence = std::function<mpz_class(long)>;

struct Mismatch {
  long index;
  mpz_class local;
  mpz_class remote;
};

struct Comparison {
  long first = 0;
  long upto = 0;
  std::optional<Mismatch> mismatch;

  bool agree() const { return !mismatch; }
};

// Compares local(n) with the b-file for n in [first, upto]; coverage-gap
// if the file lacks any of those indices.
Comparison compare(const LocalSequence& local, const BFile& bfile, long upto, long first = 1);

struct KnownSequence {
  std::string id;
  std::string description;
  long offset;
  // Values for offset..upto, indexed from offset.
  std::function<std::vector<mpz_class>(long upto)> values;
};

const std::vector<KnownSequence>& known_sequences();
// Accepts "A228441", "a228441" or "228441"; unknown ids raise unknown-identity.
const KnownSequence& known_sequence(std::string_view id);
std::string normalize_id(std::string_view id);
std::string bfile_name(std::string_view id);  // "b228441.txt"

Comparison check(const KnownSequence& seq, const BFile& bfile, long upto);

// HTTPS GET of the b-file from oeis.org; io-error when unreachable.
std::string fetch_bfile(std::string_view id, int timeout_seconds = 20);

}  // namespace qsv::oeis
