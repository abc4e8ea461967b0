// Copyright 2026 The OntoRich Authors.
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

// ontorich: command-line front end of the workspace service.

#include <pthread.h>
#include <signal.h>

#include <cstdio>
#include <ctime>
#include <filesystem>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "ontorich/api.h"
#include "ontorich/error.h"
#include "ontorich/fileio.h"
#include "ontorich/server.h"
#include "ontorich/workspace.h"

namespace ontorich {
namespace {

struct Options {
  std::string workspace = Workspace::DefaultRoot().string();
  bool json = false;
  std::optional<int64_t> revision;
};

std::string Num(const Json &j) {
  if (j.is_null()) return "undefined";
  if (j.is_number_integer() || j.is_number_unsigned()) return std::to_string(j.get<int64_t>());
  return FormatDouble(j.get<double>());
}

std::string IsoTime(int64_t seconds) {
  std::time_t t = static_cast<std::time_t>(seconds);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void PrintCounts(const Json &counts) {
  for (const auto &[key, value] : counts.items()) {
    std::cout << "  " << key << ": " << Num(value) << "\n";
  }
}

void PrintTree(const Json &nodes, int depth) {
  for (const Json &n : nodes) {
    std::cout << std::string(2 * depth, ' ') << n["label"].get<std::string>() << "  <"
              << n["iri"].get<std::string>() << ">\n";
    PrintTree(n["children"], depth + 1);
  }
}

void PrintHyponyms(const Json &node, int depth) {
  std::string lemmas;
  for (const Json &l : node["lemmas"]) {
    if (!lemmas.empty()) lemmas += ", ";
    lemmas += l.get<std::string>();
  }
  if (node["synset_id"].is_null()) {
    std::cout << std::string(2 * depth, ' ') << "(" << lemmas << ")\n";
  } else {
    std::cout << std::string(2 * depth, ' ') << lemmas << "  ["
              << node["synset_id"].get<std::string>() << "]\n";
  }
  for (const Json &c : node["children"]) PrintHyponyms(c, depth + 1);
}

std::string CandidateLine(const Json &c) {
  std::string line = c["id"].get<std::string>() + "  " + c["status"].get<std::string>() + "  " +
                     c["kind"].get<std::string>() + "  ";
  if (c.contains("instance")) {
    const Json &i = c["instance"];
    std::string target = !i["class"].is_null()        ? i["class"].get<std::string>()
                         : !i["raw_concept"].get<std::string>().empty()
                             ? "\"" + i["raw_concept"].get<std::string>() + "\""
                             : "?";
    line += i["surface"].get<std::string>() + " -> " + target + "  (" +
            i["family"].get<std::string>() + ": " + i["rule"].get<std::string>() + ")";
  } else if (c.contains("relation")) {
    const Json &r = c["relation"];
    line += r["subject_label"].get<std::string>() + " " + r["relation"].get<std::string>() +
            " " + r["object_label"].get<std::string>();
  } else if (c.contains("term")) {
    line += c["term"]["surface"].get<std::string>() + "  (n=" + Num(c["term"]["n_i"]) + ")";
  }
  return line;
}

void PrintInstanceHits(const Json &list) {
  for (const Json &i : list) {
    std::string target = !i["class"].is_null() ? i["class"].get<std::string>()
                                               : i["raw_concept"].get<std::string>();
    std::cout << i["surface"].get<std::string>() << " -> " << (target.empty() ? "?" : target)
              << "  (" << i["family"].get<std::string>() << ": "
              << i["rule"].get<std::string>() << ")\n";
  }
}

// Text renderings of the API results; --json prints the result itself.
using Printer = std::function<void(const Json &)>;

void PrintReport(const Json &r) {
  std::cout << "ontology " << r["ontology_id"].get<std::string>() << " at "
            << IsoTime(r["timestamp"].get<int64_t>()) << "\n";
  for (const char *m : {"rr", "ir", "ar", "cr", "cohesion"}) {
    std::cout << "  " << m << ": " << Num(r[m]);
    if (r["undefined_reason"].contains(m)) {
      std::cout << " (" << r["undefined_reason"][m].get<std::string>() << ")";
    }
    std::cout << "\n";
  }
  if (!r["per_class"].empty()) {
    std::cout << "class  connectivity  importance  class_rr\n";
    for (const auto &[iri, m] : r["per_class"].items()) {
      std::cout << "  " << iri << "  " << Num(m["connectivity"]) << "  " << Num(m["importance"])
                << "  " << Num(m["class_rr"]) << "\n";
    }
  }
}

class Cli {
 public:
  explicit Cli(const Options &options) : options_(options) {}

  // Read-only: no lock is needed, but recovery only runs when the lock is
  // free.
  int Read(const std::function<Json(Api &)> &run, const Printer &print) {
    std::unique_ptr<WorkspaceLock> lock;
    try {
      lock = std::make_unique<WorkspaceLock>(options_.workspace);
    } catch (const Error &e) {
      if (e.kind() != "WorkspaceLocked") throw;
    }
    Workspace ws(options_.workspace, lock != nullptr);
    Api api(ws, DefaultHttpGet);
    Emit(run(api), print);
    return 0;
  }

  int Write(const std::function<Json(Api &, std::optional<int64_t>)> &run,
            const Printer &print) {
    WorkspaceLock lock(options_.workspace);
    Workspace ws(options_.workspace);
    Api api(ws, DefaultHttpGet);
    Emit(run(api, options_.revision), print);
    return 0;
  }

  int Serve(const std::string &host, int port) {
    WorkspaceLock lock(options_.workspace);
    Workspace ws(options_.workspace);
    Api api(ws, DefaultHttpGet);
    Server server(api);
    int bound = server.Bind(host, port);
    sigset_t signals;
    sigemptyset(&signals);
    sigaddset(&signals, SIGINT);
    sigaddset(&signals, SIGTERM);
    pthread_sigmask(SIG_BLOCK, &signals, nullptr);
    std::thread waiter([&] {
      int sig = 0;
      sigwait(&signals, &sig);
      server.Stop();
    });
    std::cerr << "serving " << options_.workspace << " on http://" << host << ":" << bound
              << " (revision " << ws.revision() << ")\n";
    std::cout.flush();
    server.Listen();
    pthread_kill(waiter.native_handle(), SIGTERM);
    waiter.join();
    return 0;
  }

 private:
  void Emit(const Json &result, const Printer &print) {
    if (options_.json) {
      std::cout << DumpJson(result);
    } else {
      print(result);
    }
  }

  const Options &options_;
};

std::string ReadArg(const std::string &path) {
  if (!std::filesystem::is_regular_file(path)) {
    throw Error("FileNotFound", "no such file " + path);
  }
  return ReadFile(path);
}

int Run(int argc, char **argv) {
  CLI::App app{"OntoRich ontology workbench"};
  app.require_subcommand(1);
  Options options;
  app.add_option("-w,--workspace", options.workspace,
                 "Workspace directory (default $ONTORICH_WORKSPACE or ./workspace)");
  app.add_flag("--json", options.json, "Print the JSON result");
  app.add_option("--revision", options.revision,
                 "Revision the mutation is based on; fails when stale");

  Cli cli(options);
  std::function<int()> action;

  std::string file;
  auto *load = app.add_subcommand("load", "Load a Turtle ontology into the workspace");
  std::string ontology_id;
  load->add_option("file", file, "Turtle file")->required();
  load->add_option("--id", ontology_id, "Ontology id (default: file stem)");
  load->callback([&] {
    action = [&] {
      std::string text = ReadArg(file);
      std::string id = ontology_id.empty() ? OntologyIdFromPath(file) : ontology_id;
      return cli.Write([&](Api &api, auto rev) { return api.Load(text, id, rev); },
                       [](const Json &r) {
                         std::cout << "loaded " << r["ontology_id"].get<std::string>()
                                   << " (revision " << r["revision"] << ")\n";
                         PrintCounts(r["counts"]);
                       });
    };
  });

  auto *save = app.add_subcommand("save", "Write the ontology as Turtle");
  std::string save_path;
  save->add_option("file", save_path, "Target file (default: the workspace ontology)");
  save->callback([&] {
    action = [&] {
      std::optional<std::string> path;
      if (!save_path.empty()) path = save_path;
      return cli.Read([&](Api &api) { return api.Save(path); }, [](const Json &r) {
        std::cout << "wrote " << r["path"].get<std::string>() << " (" << r["bytes"]
                  << " bytes)\n";
      });
    };
  });

  auto *tree = app.add_subcommand("tree", "Print the class hierarchy");
  tree->callback([&] {
    action = [&] {
      return cli.Read([](Api &api) { return api.Tree(); },
                      [](const Json &r) { PrintTree(r["roots"], 0); });
    };
  });

  auto *instances = app.add_subcommand("instances", "List instances, optionally of a class");
  std::string instance_class;
  instances->add_option("--class", instance_class, "Class IRI (subclasses included)");
  instances->callback([&] {
    action = [&] {
      std::optional<std::string> cls;
      if (!instance_class.empty()) cls = instance_class;
      return cli.Read([&](Api &api) { return api.Instances(cls); }, [](const Json &r) {
        for (const Json &i : r["instances"]) {
          std::cout << i["label"].get<std::string>() << "  <" << i["iri"].get<std::string>()
                    << ">\n";
        }
      });
    };
  });

  auto *relationships = app.add_subcommand("relationships", "List schema relationships");
  relationships->callback([&] {
    action = [&] {
      return cli.Read([](Api &api) { return api.Relationships(); }, [](const Json &r) {
        for (const Json &e : r["subclass_edges"]) {
          std::cout << e["child"].get<std::string>() << " subClassOf "
                    << e["parent"].get<std::string>() << "\n";
        }
        for (const Json &e : r["schema_relations"]) {
          std::cout << e["subject"].get<std::string>() << " " << e["property"].get<std::string>()
                    << " " << e["object"].get<std::string>() << "\n";
        }
      });
    };
  });

  auto *validate = app.add_subcommand("validate", "Check the ontology structure");
  validate->callback([&] {
    action = [&] {
      return cli.Read([](Api &api) { return api.Validate(); }, [](const Json &r) {
        if (r["issues"].empty()) std::cout << "no issues\n";
        for (const Json &i : r["issues"]) {
          std::cout << i["kind"].get<std::string>() << ": " << i["message"].get<std::string>()
                    << "\n";
        }
      });
    };
  });

  auto *status = app.add_subcommand("status", "Summarize the workspace");
  status->callback([&] {
    action = [&] {
      return cli.Read([](Api &api) { return api.Status(); }, [](const Json &r) {
        std::cout << "ontology " << r["ontology_id"].get<std::string>() << ", revision "
                  << r["revision"] << "\n";
        PrintCounts(r["counts"]);
        std::cout << "documents: " << r["documents"] << "\nfeed items: " << r["feed_items"]
                  << "\ncandidates: " << r["candidates"] << " (" << r["proposed"]
                  << " proposed)\n";
      });
    };
  });

  auto *eval = app.add_subcommand("eval", "Evaluate the ontology metrics");
  eval->add_flag("--json", options.json, "Print the JSON report");
  eval->callback([&] {
    action = [&] { return cli.Read([](Api &api) { return api.Metrics(); }, PrintReport); };
  });

  auto *compare = app.add_subcommand("compare", "Compare metrics with another ontology");
  std::string other_file;
  compare->add_option("other", other_file, "Turtle file")->required();
  compare->callback([&] {
    action = [&] {
      std::string text = ReadArg(other_file);
      return cli.Read([&](Api &api) { return api.Compare(text, OntologyIdFromPath(other_file)); },
                      [](const Json &r) {
                        std::cout << "metric  " << r["a"].get<std::string>() << "  "
                                  << r["b"].get<std::string>() << "  delta\n";
                        for (const Json &row : r["rows"]) {
                          std::cout << row["metric"].get<std::string>() << "  " << Num(row["a"])
                                    << "  " << Num(row["b"]) << "  " << Num(row["delta"])
                                    << "\n";
                        }
                      });
    };
  });

  auto *history = app.add_subcommand("history", "Show the recorded values of a metric");
  std::string metric;
  history->add_option("metric", metric, "rr, ir, ar, cr or cohesion")->required();
  history->callback([&] {
    action = [&] {
      return cli.Read([&](Api &api) { return api.History(metric); }, [](const Json &r) {
        for (const Json &p : r["points"]) {
          std::cout << p["sequence"] << "  " << IsoTime(p["timestamp"].get<int64_t>()) << "  "
                    << Num(p["value"]) << "\n";
        }
      });
    };
  });

  size_t min_freq = 2, max_words = 3;
  bool propose = false;
  auto *terms = app.add_subcommand("terms", "Extract candidate terms from the corpus");
  terms->add_option("--min-freq", min_freq, "Minimum occurrences")->check(CLI::PositiveNumber);
  terms->add_option("--max-words", max_words, "Longest n-gram")->check(CLI::PositiveNumber);
  terms->add_flag("--propose", propose, "Queue the terms as candidates");
  terms->callback([&] {
    action = [&] {
      if (propose) {
        return cli.Write(
            [&](Api &api, auto rev) { return api.ProposeTerms(min_freq, max_words, rev); },
            [](const Json &r) {
              std::cout << "queued " << r["added"] << " of " << r["found"] << " terms\n";
              for (const Json &c : r["candidates"]) std::cout << CandidateLine(c) << "\n";
            });
      }
      return cli.Read([&](Api &api) { return api.Terms(min_freq, max_words); },
                      [](const Json &r) {
                        for (const Json &t : r["terms"]) {
                          std::cout << t["n_i"] << "  " << Num(t["tf"]) << "  "
                                    << t["surface"].get<std::string>() << "\n";
                        }
                      });
    };
  });

  auto *tfidf = app.add_subcommand("tfidf", "Rank the corpus terms by tf-idf");
  tfidf->add_option("--min-freq", min_freq, "Minimum occurrences")->check(CLI::PositiveNumber);
  tfidf->add_option("--max-words", max_words, "Longest n-gram")->check(CLI::PositiveNumber);
  tfidf->callback([&] {
    action = [&] {
      return cli.Read([&](Api &api) { return api.TfIdf(min_freq, max_words); },
                      [](const Json &r) {
                        for (const Json &t : r["terms"]) {
                          std::cout << Num(t["tfidf"]) << "  " << t["n_i"] << "  "
                                    << t["surface"].get<std::string>() << "\n";
                        }
                      });
    };
  });

  std::string lemma;
  int depth = kDefaultHyponymDepth;
  auto *hyponyms = app.add_subcommand("hyponyms", "Print the hyponym tree of a lemma");
  hyponyms->add_option("lemma", lemma)->required();
  hyponyms->add_option("--depth", depth, "Levels below the lemma")->check(CLI::NonNegativeNumber);
  hyponyms->callback([&] {
    action = [&] {
      return cli.Read([&](Api &api) { return api.Hyponyms(lemma, depth); },
                      [](const Json &r) { PrintHyponyms(r["tree"], 0); });
    };
  });

  std::string meronym_kind = "part";
  auto *meronyms = app.add_subcommand("meronyms", "List the meronyms of a lemma");
  meronyms->add_option("lemma", lemma)->required();
  meronyms->add_option("--kind", meronym_kind, "part, member or substance")
      ->check(CLI::IsMember({"part", "member", "substance"}));
  meronyms->callback([&] {
    action = [&] {
      return cli.Read([&](Api &api) { return api.Meronyms(lemma, meronym_kind); },
                      [](const Json &r) {
                        for (const Json &m : r["meronyms"]) {
                          std::cout << m.get<std::string>() << "\n";
                        }
                      });
    };
  });

  auto *suggest = app.add_subcommand("suggest-relations", "Suggest relations from the lexicon");
  suggest->add_flag("--propose", propose, "Queue the suggestions as candidates");
  suggest->callback([&] {
    action = [&] {
      if (propose) {
        return cli.Write([](Api &api, auto rev) { return api.ProposeRelations(rev); },
                         [](const Json &r) {
                           std::cout << "queued " << r["added"] << " of " << r["found"]
                                     << " relations\n";
                           for (const Json &c : r["candidates"]) {
                             std::cout << CandidateLine(c) << "\n";
                           }
                         });
      }
      return cli.Read([](Api &api) { return api.SuggestRelations(); }, [](const Json &r) {
        for (const Json &s : r["suggestions"]) {
          std::cout << s["subject_label"].get<std::string>() << " "
                    << s["relation"].get<std::string>() << " "
                    << s["object_label"].get<std::string>() << "\n";
        }
        for (const Json &u : r["unresolved"]) {
          std::cerr << "unresolved: " << u.get<std::string>() << "\n";
        }
      });
    };
  });

  std::string text, rules_file;
  auto add_extractor = [&](const char *name, const char *help, ExtractorKind kind) {
    auto *cmd = app.add_subcommand(name, help);
    if (kind == ExtractorKind::kCustom) {
      cmd->add_option("rules", rules_file, "Pattern rules file")->required();
    }
    cmd->add_option("--text", text, "Preview on this text instead of the corpus");
    cmd->callback([&, kind] {
      action = [&, kind] {
        std::string rules = kind == ExtractorKind::kCustom ? ReadArg(rules_file) : "";
        if (!text.empty()) {
          return cli.Read([&](Api &api) { return api.Preview(kind, text, rules); },
                          [](const Json &r) { PrintInstanceHits(r["candidates"]); });
        }
        return cli.Write([&](Api &api, auto rev) { return api.Extract(kind, rules, rev); },
                         [](const Json &r) {
                           std::cout << "queued " << r["added"] << " of " << r["found"]
                                     << " candidates\n";
                           for (const Json &c : r["candidates"]) {
                             std::cout << CandidateLine(c) << "\n";
                           }
                         });
      };
    });
  };
  add_extractor("hearst", "Extract instances with lexico-syntactic patterns",
                ExtractorKind::kHearst);
  add_extractor("copula", "Extract instances from copula sentences", ExtractorKind::kCopula);
  add_extractor("entities", "Extract names, organizations and dates",
                ExtractorKind::kEntities);
  add_extractor("pattern", "Extract instances with user pattern rules",
                ExtractorKind::kCustom);

  auto *feeds = app.add_subcommand("feeds", "Manage RSS feeds");
  feeds->require_subcommand(1);
  auto *sync = feeds->add_subcommand("sync", "Fetch every configured feed");
  sync->callback([&] {
    action = [&] {
      return cli.Write([](Api &api, auto rev) { return api.FeedsSync(rev); }, [](const Json &r) {
        std::cout << "new " << r["new"] << ", duplicate " << r["duplicate"] << "\n";
        for (const Json &f : r["failed"]) {
          std::cout << "failed " << f["url"].get<std::string>() << ": "
                    << f["error"].get<std::string>() << " " << f["message"].get<std::string>()
                    << "\n";
        }
      });
    };
  });
  std::string domain;
  auto *import = feeds->add_subcommand("import", "Add the stored items of a domain to the corpus");
  import->add_option("domain", domain)->required();
  import->callback([&] {
    action = [&] {
      return cli.Write([&](Api &api, auto rev) { return api.FeedsImport(domain, rev); },
                       [](const Json &r) {
                         std::cout << "added " << r["added"] << " documents ("
                                   << r["documents"] << " in corpus)\n";
                       });
    };
  });
  std::string feed_url;
  int interval = kDefaultPollInterval;
  auto *add_feed = feeds->add_subcommand("add", "Add or update a feed in feeds.conf");
  add_feed->add_option("url", feed_url)->required();
  add_feed->add_option("domain", domain)->required();
  add_feed->add_option("--interval", interval, "Poll interval in seconds");
  add_feed->callback([&] {
    action = [&] {
      FeedSpec spec{feed_url, domain, interval};
      return cli.Write([&](Api &api, auto rev) { return api.AddFeed(spec, rev); },
                       [](const Json &r) {
                         for (const Json &f : r["feeds"]) {
                           std::cout << f["url"].get<std::string>() << "  "
                                     << f["domain"].get<std::string>() << "  "
                                     << f["poll_interval"] << "\n";
                         }
                       });
    };
  });

  auto *candidates = app.add_subcommand("candidates", "Review queued candidates");
  candidates->require_subcommand(1);
  std::string status_filter, kind_filter, candidate_id, accept_class;
  auto *list = candidates->add_subcommand("list", "List candidates");
  list->add_option("--status", status_filter, "Proposed, Accepted or Rejected");
  list->add_option("--kind", kind_filter, "instance, relation or term");
  list->callback([&] {
    action = [&] {
      std::optional<std::string> st, kd;
      if (!status_filter.empty()) st = status_filter;
      if (!kind_filter.empty()) kd = kind_filter;
      return cli.Read([&](Api &api) { return api.Candidates(st, kd); }, [](const Json &r) {
        for (const Json &c : r["candidates"]) std::cout << CandidateLine(c) << "\n";
      });
    };
  });
  auto *accept = candidates->add_subcommand("accept", "Accept a candidate into the ontology");
  accept->add_option("id", candidate_id)->required();
  accept->add_option("--class", accept_class,
                     "Class IRI for an instance, or parent IRI for a term");
  accept->callback([&] {
    action = [&] {
      std::optional<std::string> cls;
      if (!accept_class.empty()) cls = accept_class;
      return cli.Write([&](Api &api, auto rev) { return api.Accept(candidate_id, cls, rev); },
                       [](const Json &r) {
                         std::cout << CandidateLine(r["candidate"]) << "  (revision "
                                   << r["revision"] << ")\n";
                       });
    };
  });
  auto *reject = candidates->add_subcommand("reject", "Reject a candidate");
  reject->add_option("id", candidate_id)->required();
  reject->callback([&] {
    action = [&] {
      return cli.Write([&](Api &api, auto rev) { return api.Reject(candidate_id, rev); },
                       [](const Json &r) {
                         std::cout << CandidateLine(r["candidate"]) << "  (revision "
                                   << r["revision"] << ")\n";
                       });
    };
  });

  auto *enrich = app.add_subcommand("enrich", "Add hyponyms of a lemma as classes");
  std::vector<std::string> selected;
  std::string target;
  enrich->add_option("lemma", lemma)->required();
  enrich->add_option("--target", target, "Class IRI the selection goes under")->required();
  enrich->add_option("--select", selected, "Synset ids to add")->required();
  enrich->add_option("--depth", depth, "Tree depth")->check(CLI::NonNegativeNumber);
  enrich->callback([&] {
    action = [&] {
      return cli.Write(
          [&](Api &api, auto rev) { return api.Enrich(lemma, depth, selected, target, rev); },
          [](const Json &r) {
            std::cout << "applied " << r["edits"].size() << " edits (revision " << r["revision"]
                      << ")\n";
          });
    };
  });

  auto *lexicon = app.add_subcommand("lexicon", "Manage the lexicon");
  lexicon->require_subcommand(1);
  auto *lexicon_import = lexicon->add_subcommand("import", "Install a lexicon file");
  lexicon_import->add_option("file", file)->required();
  lexicon_import->callback([&] {
    action = [&] {
      std::string content = ReadArg(file);
      return cli.Write([&](Api &api, auto rev) { return api.ImportLexicon(content, rev); },
                       [](const Json &r) {
                         std::cout << "installed " << r["synsets"] << " synsets ("
                                   << r["nouns"] << " nouns)\n";
                       });
    };
  });

  auto *corpus = app.add_subcommand("corpus", "Manage the corpus");
  corpus->require_subcommand(1);
  std::vector<std::string> files;
  auto *corpus_add = corpus->add_subcommand("add", "Add text files as documents");
  corpus_add->add_option("files", files)->required();
  corpus_add->callback([&] {
    action = [&] {
      return cli.Write(
          [&](Api &api, std::optional<int64_t> rev) {
            Json result;
            for (const std::string &f : files) {
              std::filesystem::path p(f);
              Document doc{p.stem().string(), p.stem().string(), ReadArg(f),
                           {DocumentSource::Kind::kImport, ""}};
              result = api.AddDocument(std::move(doc), rev);
              if (rev) rev = result["revision"].get<int64_t>();
            }
            return result;
          },
          [](const Json &r) { std::cout << r["documents"] << " documents in corpus\n"; });
    };
  });

  auto *serve = app.add_subcommand("serve", "Serve the HTTP API");
  int port = kDefaultPort;
  std::string host = "127.0.0.1";
  serve->add_option("--port", port, "TCP port")->check(CLI::Range(0, 65535));
  serve->add_option("--host", host, "Listen address");
  serve->callback([&] { action = [&] { return cli.Serve(host, port); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::Success &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return 1;
  }

  try {
    return action();
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception &e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace
}  // namespace ontorich

int main(int argc, char **argv) { return ontorich::Run(argc, argv); }
