// Command-line front end. Talks to the library only through thresh.h.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "thresh.h"

namespace {

struct CStringDeleter {
  void operator()(char* s) const { thresh_string_free(s); }
};
using CString = std::unique_ptr<char, CStringDeleter>;

struct PolyDeleter {
  void operator()(thresh_poly* p) const { thresh_poly_free(p); }
};
using Poly = std::unique_ptr<thresh_poly, PolyDeleter>;

class CliError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void check(thresh_status status) {
  if (status != THRESH_OK) {
    throw CliError(std::string(thresh_status_name(status)) + ": " + thresh_last_error());
  }
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  if (text.back() == ',') out.emplace_back();
  return out;
}

std::vector<const char*> c_strs(const std::vector<std::string>& v) {
  std::vector<const char*> out;
  out.reserve(v.size());
  for (const auto& s : v) out.push_back(s.c_str());
  return out;
}

Poly compute_charpoly(const std::string& bits, thresh_algo algo, unsigned threads) {
  thresh_poly* raw = nullptr;
  check(thresh_charpoly(bits.c_str(), algo, threads, &raw));
  return Poly(raw);
}

int cmd_charpoly(const std::string& bits, const std::string& algo_name, const std::string& format,
                 unsigned threads) {
  thresh_algo algo{};
  check(thresh_algo_from_name(algo_name.c_str(), &algo));
  const Poly p = compute_charpoly(bits, algo, threads);
  char* raw = nullptr;
  check(format == "json" ? thresh_poly_to_json(p.get(), &raw) : thresh_poly_to_text(p.get(), &raw));
  const CString s(raw);
  std::cout << s.get() << '\n';
  return 0;
}

int cmd_det(const std::string& b, const std::string& d) {
  const auto bv = split_csv(b);
  const auto dv = split_csv(d);
  const auto bp = c_strs(bv);
  const auto dp = c_strs(dv);
  char* raw = nullptr;
  check(thresh_det(bp.data(), bp.size(), dp.data(), dp.size(), &raw));
  const CString s(raw);
  std::cout << s.get() << '\n';
  return 0;
}

int cmd_eval(const std::string& bits, const std::string& at) {
  char* raw = nullptr;
  check(thresh_eval(bits.c_str(), at.c_str(), &raw));
  const CString s(raw);
  std::cout << s.get() << '\n';
  return 0;
}

int cmd_bench(std::size_t min_n, std::size_t max_n, const std::vector<std::string>& algos,
              std::uint64_t seed, const std::string& out_path, unsigned threads) {
  if (max_n < 2) throw CliError("--max-n must be at least 2");
  std::vector<thresh_algo> ids;
  for (const auto& name : algos) {
    thresh_algo a{};
    check(thresh_algo_from_name(name.c_str(), &a));
    ids.push_back(a);
  }

  std::ofstream file;
  std::ostream* os = &std::cout;
  if (out_path != "-") {
    file.open(out_path, std::ios::out | std::ios::trunc);
    if (!file) throw CliError("cannot open " + out_path + " for writing");
    os = &file;
  }

  std::vector<std::size_t> sizes;
  if (max_n < min_n) {
    sizes.push_back(max_n);
  } else {
    for (std::size_t n = std::max<std::size_t>(min_n, 2); n <= max_n; n *= 2) sizes.push_back(n);
  }

  *os << "n,algo,wall_time,coeff_maxbits\n";
  for (const std::size_t n : sizes) {
    char* raw = nullptr;
    check(thresh_random_sequence(seed, n, &raw));
    const CString bits(raw);
    for (std::size_t k = 0; k < ids.size(); ++k) {
      const auto start = std::chrono::steady_clock::now();
      const Poly p = compute_charpoly(bits.get(), ids[k], threads);
      const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
      char line[128];
      std::snprintf(line, sizeof line, "%zu,%s,%.6f,%zu\n", n, algos[k].c_str(), elapsed.count(),
                    thresh_poly_max_bits(p.get()));
      *os << line << std::flush;
    }
  }
  if (!*os) throw CliError("failed writing " + out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Determinants and characteristic polynomials of threshold graphs"};
  app.require_subcommand(1);

  std::string bits;
  std::string algo = "auto";
  std::string format = "text";
  unsigned threads = 1;
  std::size_t crossover = 0;
  auto* charpoly = app.add_subcommand("charpoly", "Characteristic polynomial of a threshold graph");
  charpoly->add_option("--bits", bits, "Creation sequence b_1..b_{n-1} over {0,1}")->required();
  charpoly->add_option("--algo", algo, "auto, quadratic, balanced, oracle or interp")
      ->check(CLI::IsMember({"auto", "quadratic", "balanced", "oracle", "interp"}));
  charpoly->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  charpoly->add_option("--threads", threads, "Worker threads for the balanced product (0 = all)");
  charpoly->add_option("--crossover", crossover,
                       "Vertex count at which auto switches to the balanced product");

  std::string b_values, d_values;
  auto* det = app.add_subcommand("det", "Determinant of a weighted threshold matrix");
  det->add_option("--b", b_values, "Comma-separated off-diagonal values b_1..b_{n-1}")->required();
  det->add_option("--d", d_values, "Comma-separated diagonal values d_1..d_n")->required();

  std::string at;
  auto* eval = app.add_subcommand("eval", "Evaluate the characteristic polynomial at an integer");
  eval->add_option("--bits", bits, "Creation sequence")->required();
  eval->add_option("--at", at, "Integer evaluation point")->required();

  std::size_t max_n = 0, min_n = 64;
  std::vector<std::string> bench_algos{"quadratic", "balanced"};
  std::uint64_t seed = 1;
  std::string out_path = "-";
  auto* bench = app.add_subcommand("bench", "Time algorithms on seeded random graphs, write CSV");
  bench->add_option("--max-n", max_n, "Largest vertex count")->required();
  bench->add_option("--min-n", min_n, "Smallest vertex count (sizes double from here)");
  bench->add_option("--algos", bench_algos, "Algorithms to time")->delimiter(',');
  bench->add_option("--seed", seed, "Instance generator seed");
  bench->add_option("--out", out_path, "CSV output path ('-' for stdout)");
  bench->add_option("--threads", threads, "Worker threads for the balanced product (0 = all)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*charpoly) {
      if (crossover != 0) thresh_set_auto_crossover(crossover);
      return cmd_charpoly(bits, algo, format, threads);
    }
    if (*det) return cmd_det(b_values, d_values);
    if (*eval) return cmd_eval(bits, at);
    if (*bench) return cmd_bench(min_n, max_n, bench_algos, seed, out_path, threads);
  } catch (const std::exception& e) {
    std::cerr << "thresh: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
