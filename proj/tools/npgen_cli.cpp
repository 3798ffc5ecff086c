// Command-line front end for the npgen shared library: translate .npir
// corpora, trace rule firings per NP, and score output against gold corpora.
// Talks to the engine exclusively through the C API.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "npgen.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

struct LexiconCloser {
  void operator()(npgen_lexicon* p) const { npgen_lexicon_close(p); }
};
struct CorpusCloser {
  void operator()(npgen_corpus* p) const { npgen_corpus_close(p); }
};
struct TextCloser {
  void operator()(char* p) const { npgen_free_text(p); }
};

using LexiconHandle = std::unique_ptr<npgen_lexicon, LexiconCloser>;
using CorpusHandle = std::unique_ptr<npgen_corpus, CorpusCloser>;
using TextHandle = std::unique_ptr<char, TextCloser>;

int fail_data(const char* what) {
  std::cerr << "npgen: " << what << ": " << npgen_last_error() << "\n";
  return kExitData;
}

LexiconHandle open_lexicon(const std::string& dir, int& exit_code) {
  npgen_lexicon* raw = nullptr;
  if (npgen_lexicon_open(dir.c_str(), &raw) != NPGEN_OK) {
    exit_code = fail_data("cannot load lexicon");
    return nullptr;
  }
  return LexiconHandle(raw);
}

// "-" reads standard input.
CorpusHandle open_corpus(const std::string& path, int& exit_code) {
  npgen_corpus* raw = nullptr;
  npgen_status status;
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    std::string text = buf.str();
    status = npgen_corpus_read(text.c_str(), text.size(), &raw);
  } else {
    status = npgen_corpus_open(path.c_str(), &raw);
  }
  if (status != NPGEN_OK) {
    exit_code = fail_data("cannot read corpus");
    return nullptr;
  }
  return CorpusHandle(raw);
}

int write_output(const std::string& path, const char* text) {
  if (path == "-" || path.empty()) {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    std::cerr << "npgen: cannot write " << path << "\n";
    return kExitData;
  }
  out << text;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"English noun-phrase number and countability realization"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(npgen_version()));

  std::string lexicon_dir = "data/lexicon";
  std::string input = "-";
  std::string output = "-";
  npgen_options options{0, 0};

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--lexicon", lexicon_dir, "Lexicon directory")->capture_default_str();
    cmd->add_flag_function(
        "--some-insertion", [&](std::int64_t) { options.some_insertion = 1; },
        "Generate 'some' for indefinite plural and mass objects");
    cmd->add_flag_function(
        "--collective-plural", [&](std::int64_t) { options.collective_plural_agreement = 1; },
        "Plural verb agreement for singular collective nouns");
  };

  CLI::App* translate = app.add_subcommand("translate", "Translate a corpus of sentence records");
  translate->add_option("input", input, "Corpus file (.npir), '-' for stdin");
  translate->add_option("-o,--output", output, "Output file, '-' for stdout");
  add_common(translate);

  CLI::App* trace = app.add_subcommand("trace", "Show rule firings for one NP");
  std::string trace_id;
  trace->add_option("np", trace_id, "NP to trace, as SENTENCE_ID:NP_ID")->required();
  trace->add_option("input", input, "Corpus file (.npir), '-' for stdin");
  add_common(trace);

  CLI::App* score = app.add_subcommand("score", "Score translate output against a gold corpus");
  std::string hyp_path;
  std::string gold_path;
  bool per_sentence = false;
  bool breakdown = false;
  score->add_option("hypotheses", hyp_path, "Translate output file")->required();
  score->add_option("gold", gold_path, "Gold corpus (.npir with [[id:text]] regions)")->required();
  score->add_flag("--per-sentence", per_sentence, "Print per-sentence verdicts");
  score->add_flag("--breakdown", breakdown, "Print heuristic error categories (extension)");
  score->add_option("-o,--output", output, "Output file, '-' for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  int exit_code = kExitOk;
  if (translate->parsed()) {
    LexiconHandle lexicon = open_lexicon(lexicon_dir, exit_code);
    if (!lexicon) return exit_code;
    CorpusHandle corpus = open_corpus(input, exit_code);
    if (!corpus) return exit_code;
    char* text = nullptr;
    if (npgen_translate(lexicon.get(), corpus.get(), &options, &text) != NPGEN_OK) {
      return fail_data("translate failed");
    }
    TextHandle guard(text);
    return write_output(output, text);
  }

  if (trace->parsed()) {
    std::size_t colon = trace_id.rfind(':');
    if (colon == std::string::npos || colon + 1 >= trace_id.size()) {
      std::cerr << "npgen: trace target must be SENTENCE_ID:NP_ID\n";
      return kExitUsage;
    }
    std::string sentence_id = trace_id.substr(0, colon);
    int np_id = 0;
    try {
      np_id = std::stoi(trace_id.substr(colon + 1));
    } catch (const std::exception&) {
      std::cerr << "npgen: bad NP id in '" << trace_id << "'\n";
      return kExitUsage;
    }
    LexiconHandle lexicon = open_lexicon(lexicon_dir, exit_code);
    if (!lexicon) return exit_code;
    CorpusHandle corpus = open_corpus(input, exit_code);
    if (!corpus) return exit_code;
    char* text = nullptr;
    if (npgen_trace(lexicon.get(), corpus.get(), sentence_id.c_str(), np_id, &options, &text) !=
        NPGEN_OK) {
      return fail_data("trace failed");
    }
    TextHandle guard(text);
    std::cout << text;
    return kExitOk;
  }

  if (score->parsed()) {
    int flags = 0;
    if (per_sentence) flags |= NPGEN_SCORE_PER_SENTENCE;
    if (breakdown) flags |= NPGEN_SCORE_BREAKDOWN;
    npgen_score_summary summary{};
    char* text = nullptr;
    if (npgen_score_files(hyp_path.c_str(), gold_path.c_str(), flags, &summary, &text) !=
        NPGEN_OK) {
      return fail_data("score failed");
    }
    TextHandle guard(text);
    return write_output(output, text);
  }

  return kExitUsage;
}
