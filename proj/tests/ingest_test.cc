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

#include "ontorich/ingest.h"

#include <gtest/gtest.h>

#include <atomic>
#include <ctime>
#include <random>

#include "ontorich/error.h"
#include "ontorich/fileio.h"
#include "ontorich/xml.h"
#include "test_util.h"

namespace ontorich {
namespace {

std::string Feed(const std::string &name) {
  return ReadFile(testutil::Fixture("feeds/" + name));
}

// Canned transport keyed by URL; unknown URLs answer 404.
HttpGetter Canned(std::map<std::string, HttpResponse> responses) {
  auto shared = std::make_shared<std::map<std::string, HttpResponse>>(std::move(responses));
  return [shared](const std::string &url) {
    auto it = shared->find(url);
    return it == shared->end() ? HttpResponse{404, ""} : it->second;
  };
}

TEST(Xml, Tree) {
  XmlElement root = ParseXml(
      "<?xml version=\"1.0\"?>\n<!DOCTYPE r [<!ELEMENT r ANY>]>\n"
      "<!-- c --><r a='1' b=\"x &amp; y\"><c>t&lt;1&#65;&#x42;</c><c/>"
      "<d><![CDATA[<raw> & ]]>tail</d><?pi data?></r>\n");
  EXPECT_EQ(root.name, "r");
  EXPECT_EQ(root.Attribute("b"), "x & y");
  EXPECT_FALSE(root.Attribute("z"));
  ASSERT_EQ(root.Children("c").size(), 2u);
  EXPECT_EQ(root.Child("c")->text, "t<1AB");
  EXPECT_EQ(root.Child("d")->text, "<raw> & tail");
  EXPECT_EQ(root.Child("d")->line, 3);
}

TEST(Xml, ErrorsCarryLines) {
  auto line_of = [](const std::string &text) {
    try {
      ParseXml(text);
    } catch (const SyntaxError &e) {
      EXPECT_EQ(e.kind(), "XmlError");
      return e.line();
    }
    return -1;
  };
  EXPECT_EQ(line_of("<a>\n<b>\n</a>"), 3);
  EXPECT_EQ(line_of("<a>\n\n&nbsp;</a>"), 3);
  EXPECT_EQ(line_of("<a/>\n<b/>"), 2);
  EXPECT_EQ(line_of("<a>\n<b></b>"), 2);
  EXPECT_EQ(line_of("text<a/>"), 1);
  EXPECT_EQ(line_of(""), 1);
  EXPECT_EQ(line_of("<a x='1' x='2'/>"), 1);
  EXPECT_EQ(line_of("<a x=1/>"), 1);
  EXPECT_EQ(line_of("<a>&#0;</a>"), 1);
  EXPECT_EQ(line_of("<a><!-- x -- y --></a>"), 1);
  EXPECT_EQ(line_of(" <?xml version='1.0'?><a/>"), 1);
  EXPECT_EQ(line_of(std::string(1000, '<')), 1);
}

std::string Escape(const std::string &s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

XmlElement RandomElement(std::mt19937_64 &rng, int depth) {
  static const std::vector<std::string> kNames = {"a", "b:c", "d-e", "_f", "g.h"};
  static const std::vector<std::string> kText = {"x", " ", "<", "&", "é", "\"", "]]", "\n"};
  auto pick = [&](size_t n) { return std::uniform_int_distribution<size_t>(0, n - 1)(rng); };
  XmlElement el;
  el.name = kNames[pick(kNames.size())];
  size_t attrs = pick(3);
  for (size_t i = 0; i < attrs; ++i) {
    el.attributes.emplace_back("k" + std::to_string(i), kText[pick(kText.size())]);
  }
  size_t kids = depth > 3 ? 0 : pick(4);
  for (size_t i = 0; i < kids; ++i) el.children.push_back(RandomElement(rng, depth + 1));
  size_t words = pick(4);
  for (size_t i = 0; i < words; ++i) el.text += kText[pick(kText.size())];
  return el;
}

std::string Write(const XmlElement &el, std::mt19937_64 &rng) {
  std::string out = "<" + el.name;
  for (const auto &[k, v] : el.attributes) out += " " + k + "=\"" + Escape(v) + "\"";
  out += ">";
  // Text goes either before the children, as CDATA or escaped.
  if (!el.text.empty() && el.text.find("]]>") == std::string::npos && rng() % 2) {
    out += "<![CDATA[" + el.text + "]]>";
  } else {
    out += Escape(el.text);
  }
  for (const auto &c : el.children) out += Write(c, rng);
  return out + "</" + el.name + ">";
}

void ExpectSame(const XmlElement &a, const XmlElement &b) {
  EXPECT_EQ(a.name, b.name);
  EXPECT_EQ(a.attributes, b.attributes);
  EXPECT_EQ(a.text, b.text);
  ASSERT_EQ(a.children.size(), b.children.size());
  for (size_t i = 0; i < a.children.size(); ++i) ExpectSame(a.children[i], b.children[i]);
}

TEST(Xml, RandomTreesRoundTrip) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    XmlElement el = RandomElement(rng, 0);
    ExpectSame(ParseXml(Write(el, rng)), el);
  }
}

TEST(ParseRss, EmptyChannel) { EXPECT_TRUE(ParseRss(Feed("empty-channel.xml")).empty()); }

TEST(ParseRss, OneItem) {
  auto items = ParseRss(Feed("one-item.xml"));
  ASSERT_EQ(items.size(), 1u);
  EXPECT_EQ(items[0].guid, "g1");
  EXPECT_EQ(items[0].title, "A");
  EXPECT_EQ(items[0].link, "http://x");
  EXPECT_FALSE(items[0].pub_date);
}

TEST(ParseRss, RejectsAtomAndChannelless) {
  EXPECT_ERROR_KIND(ParseRss(Feed("atom.xml")), "NotRss");
  EXPECT_ERROR_KIND(ParseRss("<rss version='2.0'/>"), "NotRss");
  EXPECT_ERROR_KIND(ParseRss("<rss><channel>"), "XmlError");
}

TEST(ParseRss, FixtureFields) {
  auto items = ParseRss(Feed("it-news.xml"));
  ASSERT_EQ(items.size(), 3u);
  EXPECT_EQ(items[0].guid, "it-news-1");
  EXPECT_EQ(items[0].description,
            "Laptop producers such as Dell, Toshiba reported strong laptop sales this "
            "quarter. Each laptop ships with a faster processor and more memory.");
  EXPECT_EQ(items[0].pub_date, 1709544600);
  EXPECT_EQ(items[1].description.substr(0, 30), "The processor shortage is easi");
  EXPECT_EQ(items[2].guid, "http://news.example.org/2024/keyboards");
  EXPECT_EQ(items[2].pub_date, 1709730900);
  EXPECT_NE(items[2].description.find("keyboard & processor"), std::string::npos);
}

TEST(ParseRss, GuidFallsBackToHash) {
  std::string xml =
      "<rss><channel><item><title>T</title><pubDate>x</pubDate></item>"
      "<item><title>T</title><pubDate>y</pubDate></item></channel></rss>";
  auto items = ParseRss(xml);
  ASSERT_EQ(items.size(), 2u);
  EXPECT_EQ(items[0].guid.substr(0, 5), "hash:");
  EXPECT_NE(items[0].guid, items[1].guid);
  EXPECT_EQ(ParseRss(xml)[0].guid, items[0].guid);
  EXPECT_FALSE(items[0].pub_date);
}

TEST(Rfc822, KnownValues) {
  EXPECT_EQ(ParseRfc822Date("Sat, 07 Sep 2002 00:00:01 GMT"), 1031356801);
  EXPECT_EQ(ParseRfc822Date("07 Sep 2002 00:00:01 GMT"), 1031356801);
  EXPECT_EQ(ParseRfc822Date("Sat, 07 Sep 02 00:00 +0100"), 1031353200);
  EXPECT_EQ(ParseRfc822Date("Thu, 01 Jan 1970 00:00:00 -0500"), 5 * 3600);
  EXPECT_EQ(ParseRfc822Date("Tue, 29 Feb 2000 12:00:00 PDT"), 951850800);
  EXPECT_FALSE(ParseRfc822Date("Fri, 29 Feb 2001 12:00:00 GMT"));
  EXPECT_FALSE(ParseRfc822Date("2024-03-04T09:30:00Z"));
  EXPECT_FALSE(ParseRfc822Date("Mon, 04 Foo 2024 09:30:00 GMT"));
  EXPECT_FALSE(ParseRfc822Date("Mon, 04 Mar 2024 25:30:00 GMT"));
  EXPECT_FALSE(ParseRfc822Date(""));
  EXPECT_EQ(FormatRfc822Date(1031356801), "Sat, 07 Sep 2002 00:00:01 +0000");
}

TEST(Rfc822, AgreesWithTimegm) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int64_t> secs(-2'000'000'000LL, 4'000'000'000LL);
  for (int i = 0; i < 5000; ++i) {
    int64_t t = secs(rng);
    std::string text = FormatRfc822Date(t);
    ASSERT_EQ(ParseRfc822Date(text), t) << text;
    std::tm tm{};
    time_t tt = static_cast<time_t>(t);
    gmtime_r(&tt, &tm);
    EXPECT_EQ(timegm(&tm), tt);
    char buf[64];
    std::strftime(buf, sizeof buf, "%a, %d %b %Y %H:%M:%S +0000", &tm);
    EXPECT_EQ(text, buf);
  }
}

TEST(HtmlToText, Shapes) {
  EXPECT_EQ(HtmlToText("<p>Hello <b>wor</b>ld</p><p>Next&nbsp;one</p>"),
            "Hello world Next&nbsp;one");
  EXPECT_EQ(HtmlToText("a<br/>b &lt;c&gt; &#233;&#xE9; 1 < 2"), "a b <c> éé 1 < 2");
  EXPECT_EQ(HtmlToText("x<script>var a = '<p>';</script>y<style>p{}</style>z"), "xyz");
  EXPECT_EQ(HtmlToText("<!-- hidden --> shown  \n text"), "shown text");
  EXPECT_EQ(HtmlToText(""), "");
}

TEST(FeedsConf, Parse) {
  auto specs = ParseFeedsConf(
      "# feeds\nhttp://a/rss\tIT\nhttp://b/rss\tScience\t120\r\n\n");
  ASSERT_EQ(specs.size(), 2u);
  EXPECT_EQ(specs[0].poll_interval, kDefaultPollInterval);
  EXPECT_EQ(specs[1].domain, "Science");
  EXPECT_EQ(specs[1].poll_interval, 120);
  EXPECT_EQ(ParseFeedsConf(FormatFeedsConf(specs)), specs);
  EXPECT_ERROR_KIND(ParseFeedsConf("http://a\tIT\t59\n"), "InvalidFeedSpec");
  EXPECT_ERROR_KIND(ParseFeedsConf("http://a\n"), "FeedsConfError");
  EXPECT_ERROR_KIND(ParseFeedsConf("http://a\tIT\tsoon\n"), "FeedsConfError");
  EXPECT_ERROR_KIND(ParseFeedsConf("http://a\t\t60\n"), "InvalidFeedSpec");
}

TEST(FetchFeed, CannedTransport) {
  HttpGetter http = Canned({{"http://it/rss", {200, Feed("it-news.xml")}},
                            {"http://atom/", {200, Feed("atom.xml")}}});
  auto items = FetchFeed({"http://it/rss", "IT", 3600}, http);
  ASSERT_EQ(items.size(), 3u);
  for (const auto &i : items) EXPECT_EQ(i.domain, "IT");
  try {
    FetchFeed({"http://gone/", "IT", 3600}, http);
    FAIL();
  } catch (const FetchError &e) {
    EXPECT_EQ(e.status(), 404);
  }
  EXPECT_ERROR_KIND(FetchFeed({"http://atom/", "IT", 3600}, http), "NotRss");
}

TEST(Sync, IdempotentAndIsolated) {
  testutil::TempDir dir;
  HttpGetter http = Canned({{"http://it/rss", {200, Feed("it-news.xml")}},
                            {"http://sci/rss", {200, Feed("science.xml")}}});
  std::vector<FeedSpec> specs = {{"http://it/rss", "IT", 3600},
                                 {"http://gone/rss", "IT", 3600},
                                 {"http://sci/rss", "Science", 3600}};
  FeedStore store(dir.path() / "feeds" / "items.log");
  SyncReport first = Sync(store, specs, http);
  EXPECT_EQ(first.new_items, 5u);
  EXPECT_EQ(first.duplicates, 0u);
  ASSERT_EQ(first.failed.size(), 1u);
  EXPECT_EQ(first.failed[0].url, "http://gone/rss");
  EXPECT_EQ(first.failed[0].error, "FetchError");
  SyncReport second = Sync(store, specs, http);
  EXPECT_EQ(second.new_items, 0u);
  EXPECT_EQ(second.duplicates, 5u);
  EXPECT_EQ(Sync(store, {}, http).new_items, 0u);

  FeedStore reopened(store.path());
  EXPECT_EQ(reopened.items(), store.items());
  EXPECT_TRUE(reopened.Contains("it-news-2"));
  EXPECT_EQ(Sync(reopened, specs, http).new_items, 0u);
}

TEST(Sync, ReplayAfterCrashMatchesCleanRun) {
  testutil::TempDir dir;
  HttpGetter http = Canned({{"http://it/rss", {200, Feed("it-news.xml")}},
                            {"http://sci/rss", {200, Feed("science.xml")}}});
  std::vector<FeedSpec> specs = {{"http://it/rss", "IT", 3600},
                                 {"http://sci/rss", "Science", 3600}};
  auto clean_path = dir.path() / "clean.log";
  {
    FeedStore clean(clean_path);
    Sync(clean, specs, http);
  }
  std::string full = ReadFile(clean_path);
  // Every crash point: k complete lines plus a torn fragment of the next.
  size_t pos = 0;
  for (int k = 0; pos < full.size(); ++k) {
    size_t nl = full.find('\n', pos);
    auto crash = dir.path() / ("crash" + std::to_string(k) + ".log");
    WriteFileAtomic(crash, full.substr(0, pos) + full.substr(pos, (nl - pos) / 2));
    FeedStore replay(crash);
    Sync(replay, specs, http);
    EXPECT_EQ(ReadFile(crash), full) << "crash after " << k << " lines";
    pos = nl + 1;
  }
}

TEST(FeedStore, CorruptMiddleLine) {
  testutil::TempDir dir;
  WriteFileAtomic(dir.path() / "items.log", "only\tthree\tfields\n");
  EXPECT_ERROR_KIND(FeedStore(dir.path() / "items.log"), "FeedStoreCorrupt");
}

TEST(FeedStore, EscapedFieldsRoundTrip) {
  testutil::TempDir dir;
  FeedItem item{"g\t1", "tab\there\nand\\slash", "d", "l", -5, "IT"};
  {
    FeedStore store(dir.path() / "items.log");
    EXPECT_TRUE(store.Append(item));
    EXPECT_FALSE(store.Append(item));
  }
  FeedStore reopened(dir.path() / "items.log");
  ASSERT_EQ(reopened.items().size(), 1u);
  EXPECT_EQ(reopened.items()[0], item);
}

TEST(Sync, ConcurrentFetches) {
  testutil::TempDir dir;
  std::atomic<int> calls{0};
  std::string body = Feed("one-item.xml");
  HttpGetter http = [&](const std::string &url) {
    ++calls;
    std::string b = body;
    b.replace(b.find("g1"), 2, url);
    return HttpResponse{200, b};
  };
  std::vector<FeedSpec> specs;
  for (int i = 0; i < 16; ++i) specs.push_back({"http://f/" + std::to_string(i), "D", 60});
  FeedStore store(dir.path() / "items.log");
  SyncReport r = Sync(store, specs, http);
  EXPECT_EQ(r.new_items, 16u);
  EXPECT_EQ(calls.load(), 16);
  for (int i = 0; i < 16; ++i) EXPECT_EQ(store.items()[i].guid, specs[i].url);
}

TEST(ItemsToCorpus, ImportIsIdempotent) {
  testutil::TempDir dir;
  HttpGetter http = Canned({{"http://it/rss", {200, Feed("it-news.xml")}},
                            {"http://sci/rss", {200, Feed("science.xml")}}});
  FeedStore store(dir.path() / "items.log");
  Corpus empty = ItemsToCorpus(store, "IT", Corpus());
  EXPECT_TRUE(empty.empty());
  Sync(store, {{"http://it/rss", "IT", 3600}, {"http://sci/rss", "Science", 3600}}, http);
  Corpus base;
  base.Add({"manual-1", "Note", "A note.", {}});
  Corpus once = ItemsToCorpus(store, "IT", base);
  EXPECT_EQ(once.size(), 4u);
  const Document &d = once.documents()[1];
  EXPECT_EQ(d.id, FeedDocumentId("it-news-1"));
  EXPECT_EQ(d.title, "Laptop producers report strong sales");
  EXPECT_EQ(d.body.substr(0, d.title.size() + 2), d.title + "\n\n");
  EXPECT_EQ(d.source.ToString(), "feed:IT");
  EXPECT_EQ(ItemsToCorpus(store, "IT", once), once);
  EXPECT_EQ(ItemsToCorpus(store, "Nowhere", once), once);
  EXPECT_EQ(ItemsToCorpus(store, "Science", once).size(), 6u);
  EXPECT_TRUE(IsValidDocumentId(d.id));
}

}  // namespace
}  // namespace ontorich
