#include "pbnn/hdlgen.hpp"

#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

#include "pbnn/state.hpp"
#include "pbnn/version.hpp"

namespace pbnn {

namespace {

std::string banner() {
  return std::string("// Generated by ") + kToolName + " " + kToolVersion + "\n";
}

std::string cn_binary_literal(std::uint8_t mask) {
  std::string bits(8, '0');
  for (int k = 0; k < 8; ++k) {
    if ((mask >> k) & 1) bits[static_cast<std::size_t>(7 - k)] = '1';
  }
  return "8'b" + bits;
}

std::string weights_comment(int cn) {
  const WeightTriple w = weights_for_cn(cn);
  const auto sign = [](int v) { return v > 0 ? std::string("+1") : std::string("-1"); };
  return "CN" + std::to_string(cn) + ": w = (" + sign(w.wa) + ", " + sign(w.wb) +
         ", " + sign(w.wc) + ")";
}

}  // namespace

std::string emit_hidden_layer(int n, int cn) {
  check_dimension(n);
  check_connection_number(cn);
  const std::uint8_t mask = truth_table(cn);

  std::ostringstream out;
  out << banner();
  out << "// Hidden layer of an N-neuron ring: one 3-input Boolean function per\n"
         "// neuron. CN bit k enables neighborhood minterm k; x[j] == 1 encodes\n"
         "// x_j = +1.\n";
  out << "`timescale 1ns / 1ps\n"
         "\n"
         "module HL #(\n";
  out << "    parameter int N = " << n << ",\n";
  out << "    parameter logic [7:0] CN = " << cn_binary_literal(mask) << "  // "
      << weights_comment(cn) << "\n";
  out << ") (\n"
         "    input  wire [1:N] x,\n"
         "    output wire [1:N] xnext\n"
         ");\n"
         "  generate\n"
         "    genvar j;\n"
         "    for (j = 1; j <= N; j = j + 1) begin : neuron\n"
         "      localparam int JL = (j == 1) ? N : j - 1;  // ring: x[0] -> x[N]\n"
         "      localparam int JR = (j == N) ? 1 : j + 1;  // ring: x[N+1] -> x[1]\n"
         "      wire rule0, rule1, rule2, rule3, rule4, rule5, rule6, rule7;\n"
         "      // Boolean function\n"
         "      assign rule0 = CN[0] & (~x[JL] & ~x[j] & ~x[JR]);\n"
         "      assign rule1 = CN[1] & (~x[JL] & ~x[j] &  x[JR]);\n"
         "      assign rule2 = CN[2] & (~x[JL] &  x[j] & ~x[JR]);\n"
         "      assign rule3 = CN[3] & (~x[JL] &  x[j] &  x[JR]);\n"
         "      assign rule4 = CN[4] & ( x[JL] & ~x[j] & ~x[JR]);\n"
         "      assign rule5 = CN[5] & ( x[JL] & ~x[j] &  x[JR]);\n"
         "      assign rule6 = CN[6] & ( x[JL] &  x[j] & ~x[JR]);\n"
         "      assign rule7 = CN[7] & ( x[JL] &  x[j] &  x[JR]);\n"
         "      assign xnext[j] = (rule0)|(rule1)|(rule2)|(rule3)|(rule4)|(rule5)|(rule6)|(rule7);\n"
         "    end\n"
         "  endgenerate\n"
         "endmodule\n";
  return out.str();
}

std::string emit_output_layer(int n, const Permutation& p) {
  check_dimension(n);
  if (p.size() != n) {
    throw std::invalid_argument("permutation size does not match dimension");
  }

  std::string initializer;
  for (int i = 1; i <= n; ++i) {
    if (i > 1) initializer += ", ";
    initializer += std::to_string(p(i));
  }

  std::ostringstream out;
  out << banner();
  out << "// Output layer: registered state with synchronous load/reset and the\n"
         "// permutation wiring from the hidden layer back to the state.\n";
  out << "`timescale 1ns / 1ps\n"
         "\n"
         "module OL #(\n";
  out << "    parameter int N = " << n << "\n";
  out << ") (\n"
         "    input  wire clk,\n"
         "    input  wire load,\n"
         "    input  wire rst,\n"
         "    input  wire [1:N] i,\n"
         "    output reg  [1:N] x\n"
         ");\n"
         "  wire [1:N] xnext;\n"
         "  integer k;\n"
         "\n";
  out << "  // Permutation identifier P(" << p.to_string() << ")\n";
  out << "  localparam integer y [1:N] = '{" << initializer << "};\n";
  out << "\n"
         "  always @(posedge clk) begin\n"
         "    if (load == 1) begin\n"
         "      for (k = 1; k <= N; k = k + 1) begin\n"
         "        x[k] <= i[k];  // Initial condition\n"
         "      end\n"
         "    end else if (rst == 1) begin\n"
         "      for (k = 1; k <= N; k = k + 1) begin\n"
         "        x[k] <= 1'b0;\n"
         "      end\n"
         "    end else begin\n"
         "      for (k = 1; k <= N; k = k + 1) begin\n"
         "        x[k] <= xnext[y[k]];  // Permutation\n"
         "      end\n"
         "    end\n"
         "  end\n"
         "\n"
         "  HL hl (\n"
         "      .x(x),\n"
         "      .xnext(xnext)\n"
         "  );\n"
         "endmodule\n";
  return out.str();
}

HdlArtifact emit_hdl(int n, int cn, const Permutation& p) {
  return HdlArtifact{emit_hidden_layer(n, cn), emit_output_layer(n, p), n, cn, p};
}

std::string strip_banner(const std::string& source) {
  std::istringstream in(source);
  std::ostringstream out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("// Generated by", 0) == 0) continue;
    out << line << "\n";
  }
  return out.str();
}

BinaryState interpret_emitted(int n, int cn, const Permutation& p,
                              const BinaryState& x) {
  if (p.size() != n || x.n() != n) {
    throw std::invalid_argument("interpret_emitted: dimension mismatch");
  }
  const std::uint8_t cn_param = truth_table(cn);  // the value baked into HL

  // Wire vectors x[1..N] and xnext[1..N] with the hardware encoding.
  std::vector<int> xv(static_cast<std::size_t>(n) + 1);
  for (int j = 1; j <= n; ++j) xv[static_cast<std::size_t>(j)] = x.component(j) > 0;

  std::vector<int> xnext(static_cast<std::size_t>(n) + 1);
  for (int j = 1; j <= n; ++j) {
    const int jl = (j == 1) ? n : j - 1;
    const int jr = (j == n) ? 1 : j + 1;
    const int a = xv[static_cast<std::size_t>(jl)];
    const int b = xv[static_cast<std::size_t>(j)];
    const int c = xv[static_cast<std::size_t>(jr)];
    int value = 0;
    for (int k = 0; k < 8; ++k) {
      const int minterm = ((k & 4) ? a : !a) & ((k & 2) ? b : !b) & ((k & 1) ? c : !c);
      value |= ((cn_param >> k) & 1) & minterm;
    }
    xnext[static_cast<std::size_t>(j)] = value;
  }

  // OL update branch: x[k] <= xnext[y[k]].
  std::uint64_t out = 0;
  for (int k = 1; k <= n; ++k) {
    if (xnext[static_cast<std::size_t>(p(k))]) out |= std::uint64_t{1} << (k - 1);
  }
  return BinaryState(n, out);
}

std::vector<std::string> undeclared_identifiers(
    const std::string& source, const std::vector<std::string>& external_modules) {
  static const std::set<std::string> kKeywords = {
      "module",   "endmodule", "parameter", "localparam", "int",
      "integer",  "logic",     "wire",      "reg",        "input",
      "output",   "assign",    "generate",  "endgenerate", "genvar",
      "for",      "begin",     "end",       "always",     "posedge",
      "if",       "else"};
  static const std::set<std::string> kDeclarationHeads = {
      "module", "parameter", "localparam", "wire",
      "reg",    "integer",   "genvar",     "input",
      "output"};

  const auto is_literal = [](const std::string& tok) {
    return std::isdigit(static_cast<unsigned char>(tok[0])) ||
           tok.find('\'') != std::string::npos;
  };

  std::set<std::string> declared(external_modules.begin(), external_modules.end());
  std::set<std::string> referenced;

  // `Name instance (` at the start of a line is a module instantiation:
  // the first name is a module reference, the second declares the instance.
  const auto instantiation_prefix =
      [&](const std::string& text) -> std::pair<std::string, std::string> {
    std::size_t i = 0;
    const auto skip_ws = [&] {
      while (i < text.size() &&
             std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
      }
    };
    const auto read_ident = [&] {
      std::string out;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) ||
              text[i] == '_')) {
        out += text[i++];
      }
      return out;
    };
    skip_ws();
    const std::string mod = read_ident();
    skip_ws();
    const std::string inst = read_ident();
    skip_ws();
    if (mod.empty() || inst.empty() || i >= text.size() || text[i] != '(' ||
        kKeywords.count(mod) || kKeywords.count(inst) || is_literal(mod) ||
        is_literal(inst)) {
      return {};
    }
    return {mod, inst};
  };

  std::istringstream in(source);
  std::string line;
  while (std::getline(in, line)) {
    const std::size_t comment = line.find("//");
    if (comment != std::string::npos) line.resize(comment);
    if (line.find('`') != std::string::npos) continue;  // directives

    std::vector<std::string> tokens;
    std::string cur;
    for (std::size_t idx = 0; idx <= line.size(); ++idx) {
      const char ch = idx < line.size() ? line[idx] : ' ';
      if (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '\'') {
        cur += ch;
      } else {
        if (!cur.empty()) tokens.push_back(cur);
        cur.clear();
      }
    }
    if (tokens.empty()) continue;

    bool declaration_line = false;
    for (const std::string& tok : tokens) {
      if (kDeclarationHeads.count(tok)) {
        declaration_line = true;
        break;
      }
    }

    std::size_t first = 0;
    if (!declaration_line) {
      const auto [mod, inst] = instantiation_prefix(line);
      if (!mod.empty()) {
        referenced.insert(mod);
        declared.insert(inst);
        first = 2;
      }
    }

    for (std::size_t t = first; t < tokens.size(); ++t) {
      const std::string& tok = tokens[t];
      if (is_literal(tok) || kKeywords.count(tok)) {
        if (tok == "begin" && t + 1 < tokens.size() && !is_literal(tokens[t + 1]) &&
            !kKeywords.count(tokens[t + 1])) {
          declared.insert(tokens[t + 1]);  // generate block label
        }
        continue;
      }
      if (declaration_line) {
        declared.insert(tok);
        continue;
      }
      referenced.insert(tok);
    }
  }

  std::vector<std::string> missing;
  for (const std::string& name : referenced) {
    if (!declared.count(name)) missing.push_back(name);
  }
  return missing;
}

}  // namespace pbnn
