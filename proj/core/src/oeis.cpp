#include <qsv/arithmetic.hpp>
#include <qsv/error.hpp>
#include <qsv/oeis.hpp>
#include <qsv/series.hpp>

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include <cctype>
#include <fstream>
#include <sstream>

namespace qsv::oeis {

namespace {

Error parse_error(std::size_t line, const std::string& what) {
  return Error(Errc::parse_error, "line " + std::to_string(line) + ": " + what);
}

bool is_integer_token(const std::string& s) {
  std::size_t i = s[0] == '-' || s[0] == '+' ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

std::vector<mpz_class> overpartitions(long upto) {
  auto ctx = make_context(ParamSet{}, static_cast<int>(upto), 0);
  QSeries q = QSeries::q_power(ctx, 1);
  QSeries f = divide(pochhammer_infinite(-q), pochhammer_infinite(q));
  std::vector<mpz_class> out;
  for (long n = 0; n <= upto; ++n) out.push_back(f.coefficient(static_cast<int>(n)).constant_term().numerator());
  return out;
}

template <class F>
std::vector<mpz_class> from_one(long upto, F f) {
  std::vector<mpz_class> out;
  for (long n = 1; n <= upto; ++n) out.emplace_back(f(n));
  return out;
}

}  // namespace

std::optional<mpz_class> BFile::at(long index) const {
  auto it = std::lower_bound(entries.begin(), entries.end(), index,
                             [](const BFileEntry& e, long i) { return e.index < i; });
  if (it == entries.end() || it->index != index) return std::nullopt;
  return it->value;
}

BFile parse_bfile(std::string_view text, std::string id) {
  BFile out{std::move(id), {}};
  std::istringstream in{std::string(text)};
  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    std::istringstream fields(line);
    std::string index, value, extra;
    if (!(fields >> index) || index[0] == '#') continue;
    if (!(fields >> value)) throw parse_error(number, "expected two columns");
    if (fields >> extra && extra[0] != '#') throw parse_error(number, "unexpected third column '" + extra + "'");
    if (!is_integer_token(index)) throw parse_error(number, "bad index '" + index + "'");
    if (!is_integer_token(value)) throw parse_error(number, "bad value '" + value + "'");
    long n;
    try {
      n = std::stol(index);
    } catch (const std::exception&) {
      throw parse_error(number, "index out of range");
    }
    if (!out.entries.empty() && n <= out.entries.back().index)
      throw parse_error(number, "index " + index + " is not increasing");
    out.entries.push_back({n, mpz_class(value[0] == '+' ? value.substr(1) : value)});
  }
  return out;
}

BFile load_bfile(const std::filesystem::path& path, std::string id) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io_error, "cannot read " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_bfile(buf.str(), std::move(id));
}

Comparison compare(const LocalSequence& local, const BFile& bfile, long upto, long first) {
  Comparison out{first, upto, {}};
  for (long n = first; n <= upto; ++n) {
    auto remote = bfile.at(n);
    if (!remote)
      throw Error(Errc::coverage_gap, (bfile.id.empty() ? std::string("b-file") : bfile.id) + " has no entry for n = " +
                                          std::to_string(n));
    mpz_class mine = local(n);
    if (mine != *remote) {
      out.mismatch = Mismatch{n, mine, *remote};
      break;
    }
  }
  return out;
}

const std::vector<KnownSequence>& known_sequences() {
  static const std::vector<KnownSequence> all{
      {"A000005", "d(n), the number of divisors of n", 1,
       [](long upto) { return from_one(upto, [](long n) { return divisor_count(n); }); }},
      {"A015128", "number of overpartitions of n", 0, overpartitions},
      {"A228441", "d(n) - 4 d_{2,4}(n)", 1,
       [](long upto) {
         return from_one(upto, [](long n) { return divisor_count(n) - 4 * divisor_count_2mod4(n); });
       }},
  };
  return all;
}

std::string normalize_id(std::string_view id) {
  std::string digits(id);
  if (!digits.empty() && (digits[0] == 'A' || digits[0] == 'a')) digits.erase(0, 1);
  if (digits.empty() || digits.size() > 6 || !std::all_of(digits.begin(), digits.end(), ::isdigit))
    throw Error(Errc::invalid_argument, "not an OEIS id: '" + std::string(id) + "'");
  return "A" + std::string(6 - digits.size(), '0') + digits;
}

const KnownSequence& known_sequence(std::string_view id) {
  std::string norm = normalize_id(id);
  for (const auto& s : known_sequences())
    if (s.id == norm) return s;
  std::string known;
  for (const auto& s : known_sequences()) known += (known.empty() ? "" : ", ") + s.id;
  throw Error(Errc::unknown_identity, "no local sequence for " + norm + " (known: " + known + ")");
}

std::string bfile_name(std::string_view id) { return "b" + normalize_id(id).substr(1) + ".txt"; }

Comparison check(const KnownSequence& seq, const BFile& bfile, long upto) {
  if (upto < seq.offset) throw Error(Errc::invalid_argument, "upto is below the sequence offset");
  std::vector<mpz_class> values = seq.values(upto);
  return compare([&](long n) { return values[n - seq.offset]; }, bfile, upto, seq.offset);
}

std::string fetch_bfile(std::string_view id, int timeout_seconds) {
  std::string norm = normalize_id(id);
  httplib::SSLClient client("oeis.org", 443);
  client.set_connection_timeout(timeout_seconds, 0);
  client.set_read_timeout(timeout_seconds, 0);
  client.set_follow_location(true);
  auto res = client.Get("/" + norm + "/" + bfile_name(norm));
  if (!res) throw Error(Errc::io_error, "fetching " + norm + ": " + httplib::to_string(res.error()));
  if (res->status != 200) throw Error(Errc::io_error, "fetching " + norm + ": HTTP " + std::to_string(res->status));
  return res->body;
}

}  // namespace qsv::oeis
