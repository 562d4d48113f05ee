// Copyright 2026 The Nikhilam Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nikhilam/cli.h"

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "nikhilam/bench.h"
#include "nikhilam/errors.h"
#include "nikhilam/karatsuba.h"
#include "nikhilam/metering.h"
#include "nikhilam/nikhilam.h"

namespace nikhilam {
namespace {

using Json = nlohmann::ordered_json;

struct Invocation {
  std::vector<std::string> operands;
  int radix_in = 10;
  int radix_out = 10;
  std::string algo = "hybrid";
  std::uint64_t threshold = HybridConfig{}.threshold_n0;
  bool count = false;
  std::string format = "text";
  std::string proc = "nikhilam";
  int radix = 10;
  std::vector<std::uint64_t> sizes = {64, 256, 1024, 4096};
  std::vector<std::uint64_t> thresholds;
  std::uint64_t trials = 5;
  std::uint64_t seed = 1;
  std::vector<std::string> algos = {"schoolbook", "nikhilam", "karatsuba",
                                    "hybrid"};
  std::string out_path = "-";
};

// Thrown for semantic argument errors found after CLI11 parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Algorithm algorithm_or_throw(const std::string& name) {
  const auto algo = parse_algorithm(name);
  if (!algo) throw UsageError("unknown algorithm '" + name + "'");
  return *algo;
}

std::string counts_line(const OpCounts& ops) {
  std::string s = "mults=" + std::to_string(ops.digit_mults) +
                  " adds=" + std::to_string(ops.adds) +
                  " subs=" + std::to_string(ops.subs) +
                  " shifts=" + std::to_string(ops.shifts);
  if (ops.exact_divisions != 0) {
    s += " divs=" + std::to_string(ops.exact_divisions);
  }
  return s;
}

Json counts_json(const OpCounts& ops) {
  return {{"radix", ops.radix},
          {"digit_mults", ops.digit_mults},
          {"adds", ops.adds},
          {"subs", ops.subs},
          {"shifts", ops.shifts},
          {"exact_divisions", ops.exact_divisions}};
}

void print_product(const Invocation& inv, const std::string& algo_name,
                   const MeteredResult& r, std::ostream& out) {
  const std::string value = to_text(r.value, inv.radix_out);
  if (inv.format == "json") {
    Json doc;
    doc["algo"] = algo_name;
    doc["radix"] = inv.radix_out;
    doc["product"] = value;
    if (inv.count) doc["ops"] = counts_json(r.ops);
    out << doc.dump(2) << '\n';
    return;
  }
  out << value << '\n';
  if (inv.count) out << counts_line(r.ops) << '\n';
}

void do_mul(const Invocation& inv, std::ostream& out) {
  const Algorithm algo = algorithm_or_throw(inv.algo);
  const Natural a = from_text(inv.operands.at(0), inv.radix_in);
  const Natural b = from_text(inv.operands.at(1), inv.radix_in);
  HybridConfig cfg;
  cfg.threshold_n0 = inv.threshold;
  validate(cfg);
  MeteredResult r;
  if (inv.count) {
    r = metered_call(algo, a, b, cfg);
  } else {
    r.value = multiply(algo, a, b, cfg);
  }
  print_product(inv, std::string(algorithm_name(algo)), r, out);
}

void do_square(const Invocation& inv, std::ostream& out) {
  const Natural a = from_text(inv.operands.at(0), inv.radix_in);
  MeteredResult r;
  if (inv.count) {
    r = metered_square(a);
  } else {
    r.value = nik_square(a);
  }
  print_product(inv, "nikhilam", r, out);
}

void do_trace(const Invocation& inv, std::ostream& out) {
  const SquaringTrace trace =
      nik_square_traced(from_text(inv.operands.at(0), inv.radix_in));
  if (inv.format == "json") {
    out << trace_to_json(trace) << '\n';
  } else {
    out << render_trace_table(trace);
  }
}

void do_count(const Invocation& inv, std::ostream& out) {
  const auto proc = parse_digit_procedure(inv.proc);
  if (!proc) throw UsageError("unknown procedure '" + inv.proc + "'");
  const DigitProcedureResult r = count_digit_procedure(
      *proc, inv.operands.at(0), inv.operands.at(1), inv.radix);
  if (inv.format == "json") {
    Json doc;
    doc["proc"] = std::string(digit_procedure_name(*proc));
    doc["radix"] = inv.radix;
    doc["value"] = to_text(r.value, inv.radix);
    doc["ops"] = counts_json(r.ops);
    Json named = Json::object();
    for (const NamedValue& v : r.intermediates) {
      named[v.name] = to_text(v.value, inv.radix);
    }
    doc["intermediates"] = std::move(named);
    out << doc.dump(2) << '\n';
    return;
  }
  out << to_text(r.value, inv.radix) << '\n';
  out << counts_line(r.ops) << '\n';
}

void do_bench(const Invocation& inv, std::ostream& out) {
  std::vector<Algorithm> algos;
  for (const std::string& name : inv.algos) {
    algos.push_back(algorithm_or_throw(name));
  }
  HybridConfig cfg;
  cfg.threshold_n0 = inv.threshold;
  validate(cfg);
  for (std::uint64_t t : inv.thresholds) validate(HybridConfig{t});

  std::unique_ptr<std::ofstream> file;
  std::ostream* sink = &out;
  if (inv.out_path != "-") {
    file = std::make_unique<std::ofstream>(inv.out_path);
    if (!*file) throw UsageError("cannot open '" + inv.out_path + "'");
    sink = file.get();
  }

  if (!inv.thresholds.empty()) {
    std::vector<SweepRecord> records;
    for (Algorithm algo : algos) {
      if (algo != Algorithm::kKaratsubaPlain &&
          algo != Algorithm::kKaratsubaHybrid) {
        continue;
      }
      const BaseCase base = algo == Algorithm::kKaratsubaHybrid
                                ? BaseCase::kNikhilam
                                : BaseCase::kSchoolbook;
      auto part = threshold_sweep(inv.thresholds, inv.sizes, inv.trials,
                                  inv.seed, base);
      records.insert(records.end(), part.begin(), part.end());
    }
    emit_sweep_csv(records, *sink);
    return;
  }
  emit_csv(bench_run(algos, inv.sizes, inv.trials, inv.seed, cfg), *sink);
}

void add_radix_option(CLI::App* app, const std::string& name, int& target,
                      const std::string& help) {
  app->add_option(name, target, help)
      ->check(CLI::IsMember({2, 10, 16}))
      ->capture_default_str();
}

void add_format_option(CLI::App* app, std::string& target, bool csv = false) {
  std::vector<std::string> allowed = {"text", "json"};
  if (csv) allowed.push_back("csv");
  app->add_option("--format", target, "Output format")
      ->check(CLI::IsMember(allowed))
      ->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Invocation inv;
  CLI::App app{"Nikhilam, Karatsuba and schoolbook big-integer multiplication"};
  app.name("nikhilam");
  app.require_subcommand(1);

  auto* mul = app.add_subcommand("mul", "Multiply two integers");
  mul->add_option("operands", inv.operands, "A B")->required()->expected(2);
  mul->add_option("--algo", inv.algo,
                  "schoolbook, nikhilam, karatsuba or hybrid")
      ->capture_default_str();
  mul->add_option("--threshold", inv.threshold,
                  "Karatsuba threshold n0 in bits")
      ->capture_default_str();
  add_radix_option(mul, "--radix-in", inv.radix_in, "Operand radix");
  add_radix_option(mul, "--radix-out", inv.radix_out, "Result radix");
  mul->add_flag("--count", inv.count, "Also print radix-2 operation counts");
  add_format_option(mul, inv.format);

  auto* square = app.add_subcommand("square", "Square an integer");
  square->add_option("operand", inv.operands, "A")->required()->expected(1);
  add_radix_option(square, "--radix-in", inv.radix_in, "Operand radix");
  add_radix_option(square, "--radix-out", inv.radix_out, "Result radix");
  square->add_flag("--count", inv.count, "Also print operation counts");
  add_format_option(square, inv.format);

  auto* trace = app.add_subcommand("trace", "Print the squaring trace table");
  trace->add_option("operand", inv.operands, "A")->required()->expected(1);
  add_radix_option(trace, "--radix-in", inv.radix_in, "Operand radix");
  add_format_option(trace, inv.format);

  auto* count =
      app.add_subcommand("count", "Count digit operations of a hand method");
  count->add_option("operands", inv.operands, "M N")->required()->expected(2);
  add_radix_option(count, "--radix", inv.radix, "Digit radix");
  count->add_option("--proc", inv.proc, "schoolbook, karatsuba or nikhilam")
      ->capture_default_str();
  add_format_option(count, inv.format);

  auto* bench = app.add_subcommand("bench", "Time the multipliers, emit CSV");
  bench->add_option("--sizes", inv.sizes, "Operand sizes in bits")
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  bench->add_option("--trials", inv.trials, "Trials per size")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench->add_option("--seed", inv.seed, "Operand seed")->capture_default_str();
  bench->add_option("--algos", inv.algos, "Algorithms to time")
      ->delimiter(',');
  bench->add_option("--threshold", inv.threshold,
                    "Karatsuba threshold n0 in bits")
      ->capture_default_str();
  bench->add_option("--thresholds", inv.thresholds,
                    "Sweep these thresholds instead (Karatsuba algos only)")
      ->delimiter(',');
  bench->add_option("--out", inv.out_path, "CSV destination, - for stdout")
      ->capture_default_str();

  std::vector<const char*> argv = {"nikhilam"};
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (mul->parsed()) {
      do_mul(inv, out);
    } else if (square->parsed()) {
      do_square(inv, out);
    } else if (trace->parsed()) {
      do_trace(inv, out);
    } else if (count->parsed()) {
      do_count(inv, out);
    } else if (bench->parsed()) {
      do_bench(inv, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitOk;
}

}  // namespace nikhilam
