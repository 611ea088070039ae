#include <iostream>

#include "CLI11.hpp"
#include "coord/cli.hpp"

namespace {

int emit(const coord::cli::CmdResult& res) {
  if (!res.out.empty()) std::cout << res.out;
  if (!res.err.empty()) std::cerr << res.err;
  return res.status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coordparse — unification-based parser for coordinate structures"};
  app.require_subcommand(1);

  coord::cli::ParseOptions popts;
  CLI::App* parse_cmd = app.add_subcommand("parse", "parse one sentence and print its analyses");
  parse_cmd->add_option("--lexicon", popts.lexicon_path, "lexicon file")->required();
  parse_cmd->add_option("--max-tuple", popts.max_tuple, "largest conjunct tuple")
      ->default_val(3)
      ->check(CLI::Range(std::size_t{1}, std::size_t{8}));
  parse_cmd->add_flag("--all", popts.all, "print every analysis, not just the first");
  parse_cmd->add_option("--root", popts.root, "root part")->default_val("S");
  parse_cmd->add_option("sentence", popts.sentence, "sentence to parse")->required();

  coord::cli::CorpusOptions copts;
  CLI::App* corpus_cmd = app.add_subcommand("corpus", "run a judgment corpus and report PASS/FAIL");
  corpus_cmd->add_option("--lexicon", copts.lexicon_path, "lexicon file")->required();
  corpus_cmd->add_option("--max-tuple", copts.max_tuple, "largest conjunct tuple")
      ->default_val(3)
      ->check(CLI::Range(std::size_t{1}, std::size_t{8}));
  corpus_cmd->add_option("corpusfile", copts.corpus_path, "judgment corpus file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (parse_cmd->parsed()) return emit(coord::cli::cmd_parse(popts));
  return emit(coord::cli::cmd_corpus(copts));
}
