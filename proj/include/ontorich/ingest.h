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

// RSS 2.0 ingestion: parsing, fetching through an injected transport, an
// append-only item store and import into the corpus.

#ifndef ONTORICH_INGEST_H_
#define ONTORICH_INGEST_H_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ontorich/corpus.h"

namespace ontorich {

constexpr int kDefaultPollInterval = 3600;
constexpr int kMinPollInterval = 60;

struct FeedSpec {
  std::string url;
  std::string domain;
  int poll_interval = kDefaultPollInterval;  // seconds

  // Throws Error("InvalidFeedSpec").
  void Validate() const;

  bool operator==(const FeedSpec &) const = default;
};

// `url<TAB>domain[<TAB>poll_interval]` per line; '#' comments and blank
// lines skipped. Throws SyntaxError("FeedsConfError") or
// Error("InvalidFeedSpec").
std::vector<FeedSpec> ParseFeedsConf(std::string_view text);
std::string FormatFeedsConf(const std::vector<FeedSpec> &specs);

struct FeedItem {
  std::string guid;
  std::string title;
  std::string description;  // plain text
  std::string link;
  std::optional<int64_t> pub_date;  // seconds since the Unix epoch, UTC
  std::string domain;

  bool operator==(const FeedItem &) const = default;
};

// Items of <rss><channel> in document order. Throws SyntaxError("XmlError")
// or Error("NotRss").
std::vector<FeedItem> ParseRss(std::string_view xml);

// RFC 822 / 1123 date-time ("Mon, 02 Jan 2006 15:04:05 -0700"); the weekday
// and seconds are optional, two-digit years and named zones are accepted.
std::optional<int64_t> ParseRfc822Date(std::string_view text);
std::string FormatRfc822Date(int64_t seconds);

// Tags removed (script and style contents dropped), the five XML entities
// and numeric character references decoded, whitespace collapsed.
std::string HtmlToText(std::string_view html);

struct HttpResponse {
  int status = 0;
  std::string body;
};

// Must be safe to call from several threads at once.
using HttpGetter = std::function<HttpResponse(const std::string &url)>;

// Throws FetchError on a non-2xx status, and the parse errors of ParseRss.
std::vector<FeedItem> FetchFeed(const FeedSpec &spec, const HttpGetter &http);

// Append-only item log: one item per line, tab-separated and
// backslash-escaped fields `guid domain pub_date link title description`.
// Opening drops a torn final line and rebuilds the guid index.
class FeedStore {
 public:
  explicit FeedStore(std::filesystem::path path);

  bool Contains(const std::string &guid) const { return index_.count(guid) > 0; }
  // Appends unless the guid is stored; returns whether it was appended.
  bool Append(const FeedItem &item);

  const std::vector<FeedItem> &items() const { return items_; }
  const std::filesystem::path &path() const { return path_; }

 private:
  std::filesystem::path path_;
  std::vector<FeedItem> items_;
  std::map<std::string, size_t> index_;
};

struct SyncFailure {
  std::string url;
  std::string error;  // error kind, e.g. "FetchError"
  std::string message;

  bool operator==(const SyncFailure &) const = default;
};

struct SyncReport {
  size_t new_items = 0;
  size_t duplicates = 0;
  std::vector<SyncFailure> failed;
};

// Fetches all feeds concurrently and appends unseen items in spec order.
// A failing feed is reported and never aborts the others.
SyncReport Sync(FeedStore &store, const std::vector<FeedSpec> &specs,
                const HttpGetter &http);

// "feed-" followed by a hash of the guid.
std::string FeedDocumentId(const std::string &guid);

// Adds every stored item of `domain` whose document is not yet present.
Corpus ItemsToCorpus(const FeedStore &store, const std::string &domain,
                     Corpus corpus);

}  // namespace ontorich

#endif  // ONTORICH_INGEST_H_
