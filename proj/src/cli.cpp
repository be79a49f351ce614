// Copyright 2026 The sectiondim Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sectiondim/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "sectiondim/cayley.hpp"
#include "sectiondim/dim_estimator.hpp"
#include "sectiondim/errors.hpp"
#include "sectiondim/finite_section.hpp"
#include "sectiondim/foelner.hpp"
#include "sectiondim/group.hpp"
#include "sectiondim/group_ring.hpp"
#include "sectiondim/witness.hpp"

namespace sectiondim::cli {

namespace {

constexpr const char* kFooter = R"(Group specs:
  z:<d>   free abelian group Z^d (d >= 1), generators +-e_1 .. +-e_d
  heis    discrete Heisenberg group, generators x^{+-1}, y^{+-1},
          x = (1,0,0), y = (0,1,0), (a,b,c)(a',b',c') = (a+a',b+b',c+c'+ab')
  zxz2    Z x Z/2, generators s^{+-1} = (+-1;0), t = (0;1)
  lamp    lamplighter Z/2 wr Z, generators a = ({0};0), m^{+-1} = ({};+-1)

Element literals (whitespace ignored):
  z:<d>   (x_1,...,x_d)        e.g. (1,-2)
  heis    (a,b,c)              e.g. (0,0,1)
  zxz2    (m;e), e in {0,1}    e.g. (3;1)
  lamp    ({l_1,...,l_k};p)    e.g. ({0,2};3), ({};0)

Group-ring expressions:
  expr  := '0' | [sign] term { sign term }
  term  := coeff '*' element
  coeff := rat | rat sign urat '*i' | rat '*i'
  rat   := integer | integer '/' positive-integer
  e.g.  1*(0) - 1*(1)      1/2+3/4*i*(0;1) + 2*(0;0)

dim input files: --span holds one expression per line, --window one element
literal per line; blank lines and lines starting with '#' are skipped.

Exit codes: 0 ok, 1 usage or parse error, 2 resource cap exceeded,
3 witness not found.

Randomized tests seed from a fixed default; set SECTIONDIM_SEED to override.)";

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    lines.push_back(line);
  }
  return lines;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact finite-section bounds for kernels of group-ring "
               "convolution operators on amenable groups",
               "sectiondim"};
  app.footer(kFooter);
  app.require_subcommand(1);

  std::string group_text;
  std::size_t cap = kDefaultCap;
  std::string output_path;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--group", group_text, "Group spec: z:<d>, heis, zxz2, lamp")
        ->required();
    sub->add_option("--cap", cap, "Maximum number of enumerated elements")
        ->check(CLI::PositiveNumber);
    sub->add_option("-o,--output", output_path, "Write the report to a file");
  };

  std::size_t radius = 0;
  auto* ball_cmd = app.add_subcommand("ball", "List the ball of radius r as `distance<TAB>element`");
  add_common(ball_cmd);
  ball_cmd->add_option("--radius", radius, "Ball radius")->required();

  std::size_t window_n = 1, boundary_r = 0;
  auto* foelner_cmd = app.add_subcommand("foelner", "Window size, r-boundary and interior of F_n");
  add_common(foelner_cmd);
  foelner_cmd->add_option("--n", window_n, "Window index (>= 1)")
      ->required()
      ->check(CLI::PositiveNumber);
  foelner_cmd->add_option("--r", boundary_r, "Boundary radius")->required();

  std::string alpha_text;
  std::vector<std::size_t> n_list;
  std::optional<int> decimal;
  auto* bounds_cmd = app.add_subcommand("bounds", "Certified bounds on the kernel dimension per window");
  add_common(bounds_cmd);
  bounds_cmd->add_option("--alpha", alpha_text, "Group-ring element")->required();
  bounds_cmd->add_option("--n-list", n_list, "Comma-separated window indices")
      ->required()
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  bounds_cmd->add_option("--decimal", decimal, "Add decimal columns with this many significant digits")
      ->check(CLI::Range(1, 1000));

  std::string span_path, window_path;
  int dim_digits = 20;
  auto* dim_cmd = app.add_subcommand("dim", "Projection-based dim_A of a finite span");
  add_common(dim_cmd);
  dim_cmd->add_option("--span", span_path, "File of spanning ring elements")->required();
  dim_cmd->add_option("--window", window_path, "File of window elements")->required();
  dim_cmd->add_option("--decimal", dim_digits, "Significant digits of the decimal rendering")
      ->check(CLI::Range(1, 1000));

  std::size_t n_max = 1;
  auto* witness_cmd = app.add_subcommand("witness", "Search windows for gamma != 0 with alpha*gamma = 0");
  add_common(witness_cmd);
  witness_cmd->add_option("--alpha", alpha_text, "Group-ring element")->required();
  witness_cmd->add_option("--n-max", n_max, "Largest window index to search")
      ->required()
      ->check(CLI::PositiveNumber);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::ofstream file;
  if (!output_path.empty()) {
    file.open(output_path);
    if (!file) {
      err << "error: cannot write '" << output_path << "'\n";
      return kExitUsage;
    }
  }
  std::ostream& os = output_path.empty() ? out : file;

  try {
    const GroupSpec spec = GroupSpec::parse(group_text);

    if (ball_cmd->parsed()) {
      for (const auto& e : ball(spec, radius, cap).entries) {
        os << e.distance << '\t' << format_element(e.element) << '\n';
      }
      return kExitOk;
    }

    if (foelner_cmd->parsed()) {
      const FoelnerWindow window = foelner_set(spec, window_n, cap);
      const std::size_t boundary = r_boundary(window, boundary_r, cap).size();
      mpq_class ratio(static_cast<unsigned long>(boundary),
                      static_cast<unsigned long>(window.size()));
      ratio.canonicalize();
      os << "n\t|F|\t|dF|\t|G|\tratio\n"
         << window_n << '\t' << window.size() << '\t' << boundary << '\t'
         << window.size() - boundary << '\t' << rational_to_string(ratio) << '\n';
      return kExitOk;
    }

    if (bounds_cmd->parsed()) {
      const RingElement alpha = parse_ring_element(spec, alpha_text);
      if (alpha.is_zero()) throw ParseError("--alpha must be nonzero");
      const auto reports = convergence_report(spec, alpha, n_list, cap);
      write_reports_tsv(os, reports, decimal);
      return kExitOk;
    }

    if (dim_cmd->parsed()) {
      SpannedSubspace w;
      for (const auto& line : read_lines(span_path)) {
        w.vectors.push_back(parse_ring_element(spec, line));
      }
      for (const auto& line : read_lines(window_path)) {
        w.window.push_back(parse_element(spec, line));
      }
      std::sort(w.window.begin(), w.window.end());
      w.window.erase(std::unique(w.window.begin(), w.window.end()), w.window.end());
      if (w.window.empty()) throw ParseError("window file has no elements");
      const mpq_class d = dim_A(w);
      os << rational_to_string(d) << '\t' << to_decimal(d, dim_digits) << '\n';
      return kExitOk;
    }

    if (witness_cmd->parsed()) {
      const RingElement alpha = parse_ring_element(spec, alpha_text);
      if (alpha.is_zero()) throw ParseError("--alpha must be nonzero");
      const WitnessResult r = find_witness(spec, alpha, n_max, cap);
      if (!r.found) {
        os << "NOT FOUND up to n=" << n_max << '\n';
        return kExitNotFound;
      }
      if (!r.certified) {
        err << "error: witness failed its convolution recheck\n";
        return kExitUsage;
      }
      os << format_ring_element(r.gamma) << '\n';
      err << "witness found at n=" << r.n << '\n';
      return kExitOk;
    }
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitCap;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace sectiondim::cli
