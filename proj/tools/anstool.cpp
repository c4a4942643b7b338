// Command-line front end: ranking and unranking in abstract numeration
// systems, successor/shift relations, compilation of normal-form sets to
// padded-tuple automata, decomposition of unary automata, and the
// brute-force verification loop.
//
// Exit codes: 0 success, 1 verification failure, 2 unreadable or
// malformed input file, 3 semantically invalid input.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "ans/ans.hpp"
#include "ans/automaton_io.hpp"
#include "ans/compiler.hpp"
#include "ans/errors.hpp"
#include "ans/normal_form.hpp"
#include "ans/padded.hpp"

namespace {

constexpr unsigned long kBoundCeiling = 1000;

ans::Ans load_ans(const std::string& path) {
  ans::Automaton a = ans::load_automaton(path);
  return ans::Ans(a);
}

ans::Word parse_word(const ans::Alphabet& alphabet, const std::string& text) {
  ans::Word w;
  for (char c : text) {
    auto sym = alphabet.find_symbol(std::string(1, c));
    if (!sym) throw ans::InvalidInput(std::string("UnknownSymbol: ") + c);
    w.push_back(alphabet.letter_of(*sym));
  }
  return w;
}

std::string word_text(const ans::Alphabet& alphabet, const ans::Word& w) {
  std::string out;
  for (ans::Letter l : w) out += alphabet.letter_name(l);
  return out;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw ans::ParseError("cannot write " + out_path);
  out << text;
}

void check_bound(unsigned long bound) {
  if (bound > kBoundCeiling)
    throw ans::InvalidInput("bound exceeds the ceiling of " +
                            std::to_string(kBoundCeiling));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"abstract numeration systems toolkit"};
  app.require_subcommand(1);

  std::string ans_path, set_path, unary_path, compiled_path, out_path;
  std::string number_text, word_arg;
  unsigned long bound = 25;
  unsigned k = 1;

  auto* rep_cmd = app.add_subcommand("rep", "print the n-th word of the system");
  rep_cmd->add_option("--ans", ans_path, "numeration system automaton")->required();
  rep_cmd->add_option("n", number_text, "rank (decimal, any size)")->required();

  auto* val_cmd = app.add_subcommand("val", "print the rank of a word");
  val_cmd->add_option("--ans", ans_path)->required();
  val_cmd->add_option("word", word_arg, "word over the system's alphabet (may be empty)");

  auto* succ_cmd = app.add_subcommand("succ", "emit the k-shift relation automaton");
  succ_cmd->add_option("--ans", ans_path)->required();
  succ_cmd->add_option("--k", k, "shift amount (default 1)");
  succ_cmd->add_option("-o", out_path, "output file (default stdout)");

  auto* compile_cmd =
      app.add_subcommand("compile", "compile a normal-form set for a system");
  compile_cmd->add_option("--ans", ans_path)->required();
  compile_cmd->add_option("--set", set_path, "normal-form file")->required();
  compile_cmd->add_option("-o", out_path);

  auto* decompose_cmd =
      app.add_subcommand("decompose", "decompose a unary padded automaton");
  decompose_cmd->add_option("--unary", unary_path, "automaton file")->required();
  decompose_cmd->add_option("-o", out_path);

  auto* verify_cmd =
      app.add_subcommand("verify", "check a compiled automaton against its set");
  verify_cmd->add_option("--ans", ans_path)->required();
  verify_cmd->add_option("--set", set_path)->required();
  verify_cmd->add_option("--compiled", compiled_path)->required();
  verify_cmd->add_option("--bound", bound, "box bound (default 25)");

  auto* enum_cmd = app.add_subcommand("enum", "list set members with coordinates <= bound");
  enum_cmd->add_option("--set", set_path)->required();
  enum_cmd->add_option("--bound", bound)->required();

  try {
    app.parse(argc, argv);

    if (rep_cmd->parsed()) {
      ans::Ans s = load_ans(ans_path);
      mpz_class n(number_text);
      if (n < 0) throw ans::InvalidInput("rank must be nonnegative");
      std::cout << word_text(s.alphabet(), s.rep(n)) << '\n';
    } else if (val_cmd->parsed()) {
      ans::Ans s = load_ans(ans_path);
      std::cout << s.val(parse_word(s.alphabet(), word_arg)) << '\n';
    } else if (succ_cmd->parsed()) {
      ans::Ans s = load_ans(ans_path);
      emit(ans::canonical_text(ans::shift_k(s, k).automaton()), out_path);
    } else if (compile_cmd->parsed()) {
      ans::Ans s = load_ans(ans_path);
      ans::NormalFormUnion u = ans::load_normal_forms(set_path);
      ans::CompiledSet c = ans::compile(s, u);
      emit(ans::canonical_text(c.relation.automaton()), out_path);
    } else if (decompose_cmd->parsed()) {
      ans::Automaton a = ans::load_automaton(unary_path);
      emit(ans::serialize_normal_forms(ans::decompose_unary(a)), out_path);
    } else if (verify_cmd->parsed()) {
      check_bound(bound);
      ans::Ans s = load_ans(ans_path);
      ans::NormalFormUnion u = ans::load_normal_forms(set_path);
      ans::Automaton compiled = ans::load_automaton(compiled_path);
      ans::CompiledSet c{ans::PaddedRelation(compiled), s, compiled_path};
      ans::VerifyReport report = ans::verify(s, u, c, bound);
      std::cout << report.to_string() << '\n';
      if (!report.ok()) return 1;
    } else if (enum_cmd->parsed()) {
      check_bound(bound);
      ans::NormalFormUnion u = ans::load_normal_forms(set_path);
      int d = u.front().dim;
      std::vector<unsigned long> tuple(static_cast<std::size_t>(d), 0);
      while (true) {
        if (ans::member(tuple, u)) {
          std::cout << '(';
          for (int i = 0; i < d; ++i)
            std::cout << (i ? "," : "") << tuple[static_cast<std::size_t>(i)];
          std::cout << ")\n";
        }
        int pos = d - 1;
        while (pos >= 0 && tuple[static_cast<std::size_t>(pos)] == bound) {
          tuple[static_cast<std::size_t>(pos)] = 0;
          --pos;
        }
        if (pos < 0) break;
        ++tuple[static_cast<std::size_t>(pos)];
      }
    }
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::invalid_argument& e) {  // bad mpz string and friends
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ans::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ans::InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
