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

#include <algorithm>
#include <cstdio>
#include <future>
#include <map>
#include <set>

#include "ontorich/error.h"
#include "ontorich/fileio.h"
#include "ontorich/utf8.h"
#include "ontorich/xml.h"

namespace ontorich {

namespace {

bool HasControl(const std::string &s) {
  return s.find_first_of("\t\r\n") != std::string::npos;
}

uint64_t Fnv1a64(std::string_view data) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string Hex64(uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string CollapseWhitespace(std::string_view text) {
  std::string out;
  bool pending = false;
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f') {
      pending = !out.empty();
    } else {
      if (pending) out += ' ';
      pending = false;
      out += c;
    }
  }
  return out;
}

}  // namespace

// --- feeds.conf ---

void FeedSpec::Validate() const {
  if (url.empty()) throw Error("InvalidFeedSpec", "empty url");
  if (domain.empty()) throw Error("InvalidFeedSpec", "empty domain for " + url);
  if (HasControl(url) || HasControl(domain)) {
    throw Error("InvalidFeedSpec", "tab or newline in feed spec");
  }
  if (poll_interval < kMinPollInterval) {
    throw Error("InvalidFeedSpec", "poll_interval below " +
                                       std::to_string(kMinPollInterval) +
                                       " seconds for " + url);
  }
}

std::vector<FeedSpec> ParseFeedsConf(std::string_view text) {
  std::vector<FeedSpec> specs;
  int line_no = 0;
  size_t start = 0;
  while (start < text.size()) {
    size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(start, nl - start);
    start = nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (Trim(line).empty() || line[0] == '#') continue;
    std::vector<std::string> f = SplitTabs(line);
    if (f.size() < 2 || f.size() > 3) {
      throw SyntaxError("FeedsConfError", line_no, 1,
                        "expected url<TAB>domain[<TAB>poll_interval]");
    }
    FeedSpec spec{Trim(f[0]), Trim(f[1]), kDefaultPollInterval};
    if (f.size() == 3) {
      int64_t v;
      if (!ParseInt(Trim(f[2]), v) || v > 1'000'000'000) {
        throw SyntaxError("FeedsConfError", line_no,
                          static_cast<int>(f[0].size() + f[1].size() + 3),
                          "poll_interval must be an integer");
      }
      spec.poll_interval = static_cast<int>(v);
    }
    spec.Validate();
    specs.push_back(std::move(spec));
  }
  return specs;
}

std::string FormatFeedsConf(const std::vector<FeedSpec> &specs) {
  std::string out;
  for (const FeedSpec &s : specs) {
    out += s.url + "\t" + s.domain + "\t" + std::to_string(s.poll_interval) + "\n";
  }
  return out;
}

// --- dates ---

namespace {

// Days since 1970-01-01 for a proleptic Gregorian date.
int64_t DaysFromCivil(int64_t y, unsigned m, unsigned d) {
  y -= m <= 2;
  const int64_t era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153 * (m > 2 ? m - 3 : m + 9) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<int64_t>(doe) - 719468;
}

void CivilFromDays(int64_t z, int64_t &y, unsigned &m, unsigned &d) {
  z += 719468;
  const int64_t era = (z >= 0 ? z : z - 146096) / 146097;
  const unsigned doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  y = static_cast<int64_t>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  d = doy - (153 * mp + 2) / 5 + 1;
  m = mp < 10 ? mp + 3 : mp - 9;
  y += m <= 2;
}

const char *const kMonths[] = {"jan", "feb", "mar", "apr", "may", "jun",
                               "jul", "aug", "sep", "oct", "nov", "dec"};
const char *const kMonthNames[] = {"Jan", "Feb", "Mar", "Apr", "May", "Jun",
                                   "Jul", "Aug", "Sep", "Oct", "Nov", "Dec"};
const char *const kWeekdays[] = {"Thu", "Fri", "Sat", "Sun", "Mon", "Tue", "Wed"};

bool AllDigits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(),
                                    [](char c) { return c >= '0' && c <= '9'; });
}

int ToInt(std::string_view s) {
  int v = 0;
  for (char c : s) v = v * 10 + (c - '0');
  return v;
}

std::optional<int> ZoneOffsetMinutes(std::string_view z) {
  if ((z[0] == '+' || z[0] == '-') && z.size() == 5 && AllDigits(z.substr(1))) {
    int hh = ToInt(z.substr(1, 2));
    int mm = ToInt(z.substr(3, 2));
    if (hh > 23 || mm > 59) return std::nullopt;
    int v = hh * 60 + mm;
    return z[0] == '-' ? -v : v;
  }
  std::string u = utf8::ToLower(z);
  static const std::map<std::string, int> kZones = {
      {"ut", 0},       {"utc", 0},      {"gmt", 0},      {"z", 0},
      {"est", -5 * 60}, {"edt", -4 * 60}, {"cst", -6 * 60}, {"cdt", -5 * 60},
      {"mst", -7 * 60}, {"mdt", -6 * 60}, {"pst", -8 * 60}, {"pdt", -7 * 60}};
  auto it = kZones.find(u);
  if (it != kZones.end()) return it->second;
  // Military zones carry no reliable meaning; read as UTC.
  if (u.size() == 1 && u[0] >= 'a' && u[0] <= 'z' && u[0] != 'j') return 0;
  return std::nullopt;
}

}  // namespace

std::optional<int64_t> ParseRfc822Date(std::string_view text) {
  std::string s = Trim(text);
  std::string_view rest = s;
  size_t comma = rest.find(',');
  if (comma != std::string_view::npos) rest.remove_prefix(comma + 1);
  std::vector<std::string_view> parts;
  size_t i = 0;
  while (i < rest.size()) {
    while (i < rest.size() && (rest[i] == ' ' || rest[i] == '\t')) ++i;
    size_t j = i;
    while (j < rest.size() && rest[j] != ' ' && rest[j] != '\t') ++j;
    if (j > i) parts.push_back(rest.substr(i, j - i));
    i = j;
  }
  if (parts.size() < 4 || parts.size() > 5) return std::nullopt;
  std::string_view day = parts[0], mon = parts[1], year = parts[2], time = parts[3];
  if (!AllDigits(day) || day.size() > 2) return std::nullopt;
  if (mon.size() < 3) return std::nullopt;
  std::string m3 = utf8::ToLower(mon.substr(0, 3));
  int month = 0;
  for (int k = 0; k < 12; ++k) {
    if (m3 == kMonths[k]) month = k + 1;
  }
  if (month == 0) return std::nullopt;
  if (!AllDigits(year) || (year.size() != 2 && year.size() != 4)) return std::nullopt;
  int y = ToInt(year);
  if (year.size() == 2) y += y < 50 ? 2000 : 1900;
  int d = ToInt(day);
  static const int kDays[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  bool leap = (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
  int max_day = kDays[month - 1] + (month == 2 && leap ? 1 : 0);
  if (d < 1 || d > max_day) return std::nullopt;
  int hh, mm, ss = 0;
  if (time.size() == 5 && time[2] == ':' && AllDigits(time.substr(0, 2)) &&
      AllDigits(time.substr(3, 2))) {
    hh = ToInt(time.substr(0, 2));
    mm = ToInt(time.substr(3, 2));
  } else if (time.size() == 8 && time[2] == ':' && time[5] == ':' &&
             AllDigits(time.substr(0, 2)) && AllDigits(time.substr(3, 2)) &&
             AllDigits(time.substr(6, 2))) {
    hh = ToInt(time.substr(0, 2));
    mm = ToInt(time.substr(3, 2));
    ss = ToInt(time.substr(6, 2));
  } else {
    return std::nullopt;
  }
  if (hh > 23 || mm > 59 || ss > 60) return std::nullopt;
  int offset = 0;
  if (parts.size() == 5) {
    std::optional<int> z = ZoneOffsetMinutes(parts[4]);
    if (!z) return std::nullopt;
    offset = *z;
  }
  int64_t days = DaysFromCivil(y, static_cast<unsigned>(month), static_cast<unsigned>(d));
  return days * 86400 + hh * 3600 + mm * 60 + ss - offset * 60;
}

std::string FormatRfc822Date(int64_t seconds) {
  int64_t days = seconds >= 0 ? seconds / 86400 : -((-seconds + 86399) / 86400);
  int64_t rem = seconds - days * 86400;
  int64_t y;
  unsigned m, d;
  CivilFromDays(days, y, m, d);
  int64_t wd = ((days % 7) + 7) % 7;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s, %02u %s %04lld %02lld:%02lld:%02lld +0000",
                kWeekdays[wd], d, kMonthNames[m - 1], static_cast<long long>(y),
                static_cast<long long>(rem / 3600),
                static_cast<long long>(rem / 60 % 60),
                static_cast<long long>(rem % 60));
  return buf;
}

// --- HTML ---

namespace {

bool IsAsciiAlpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }

const std::set<std::string> &BlockTags() {
  static const std::set<std::string> kTags = {
      "address", "article", "aside", "blockquote", "br", "dd", "div", "dl",
      "dt", "figcaption", "figure", "footer", "h1", "h2", "h3", "h4", "h5",
      "h6", "header", "hr", "li", "ol", "p", "pre", "section", "table",
      "tbody", "td", "th", "thead", "tr", "ul"};
  return kTags;
}

// Decodes the entity at `pos` (on '&') into `out`; returns the bytes
// consumed, or 0 when it is not a known reference.
size_t DecodeEntity(std::string_view s, size_t pos, std::string &out) {
  size_t semi = s.find(';', pos);
  if (semi == std::string_view::npos || semi - pos > 10) return 0;
  std::string_view ref = s.substr(pos + 1, semi - pos - 1);
  static const std::map<std::string_view, char> kNamed = {
      {"lt", '<'}, {"gt", '>'}, {"amp", '&'}, {"quot", '"'}, {"apos", '\''}};
  auto it = kNamed.find(ref);
  if (it != kNamed.end()) {
    out += it->second;
    return semi + 1 - pos;
  }
  if (ref.size() < 2 || ref[0] != '#') return 0;
  bool hex = ref[1] == 'x' || ref[1] == 'X';
  std::string_view digits = ref.substr(hex ? 2 : 1);
  if (digits.empty()) return 0;
  uint32_t cp = 0;
  for (char c : digits) {
    int v;
    if (c >= '0' && c <= '9') {
      v = c - '0';
    } else if (hex && c >= 'a' && c <= 'f') {
      v = c - 'a' + 10;
    } else if (hex && c >= 'A' && c <= 'F') {
      v = c - 'A' + 10;
    } else {
      return 0;
    }
    cp = cp * (hex ? 16 : 10) + static_cast<uint32_t>(v);
    if (cp > 0x10FFFF) return 0;
  }
  if (cp == 0 || (cp >= 0xD800 && cp <= 0xDFFF)) return 0;
  utf8::Append(out, cp);
  return semi + 1 - pos;
}

}  // namespace

std::string HtmlToText(std::string_view html) {
  std::string out;
  size_t i = 0;
  while (i < html.size()) {
    char c = html[i];
    if (c == '<' && i + 1 < html.size() &&
        (IsAsciiAlpha(html[i + 1]) || html[i + 1] == '/' || html[i + 1] == '!' ||
         html[i + 1] == '?')) {
      if (html.substr(i, 4) == "<!--") {
        size_t end = html.find("-->", i + 4);
        i = end == std::string_view::npos ? html.size() : end + 3;
        continue;
      }
      size_t end = html.find('>', i);
      if (end == std::string_view::npos) break;
      size_t n = i + 1;
      if (n < html.size() && html[n] == '/') ++n;
      size_t name_end = n;
      while (name_end < end && (IsAsciiAlpha(html[name_end]) ||
                                (html[name_end] >= '0' && html[name_end] <= '9'))) {
        ++name_end;
      }
      std::string name = utf8::ToLower(html.substr(n, name_end - n));
      bool closing = html[i + 1] == '/';
      i = end + 1;
      if (!closing && (name == "script" || name == "style")) {
        std::string lower = utf8::ToLower(html.substr(i));
        size_t close = lower.find("</" + name);
        if (close == std::string::npos) break;
        size_t gt = html.find('>', i + close);
        i = gt == std::string_view::npos ? html.size() : gt + 1;
        continue;
      }
      if (BlockTags().count(name)) out += ' ';
      continue;
    }
    if (c == '&') {
      size_t used = DecodeEntity(html, i, out);
      if (used > 0) {
        i += used;
        continue;
      }
    }
    out += c;
    ++i;
  }
  return CollapseWhitespace(out);
}

// --- RSS ---

std::vector<FeedItem> ParseRss(std::string_view xml) {
  XmlElement root = ParseXml(xml);
  if (root.name != "rss") {
    throw Error("NotRss", "root element is <" + root.name + ">, not <rss>");
  }
  const XmlElement *channel = root.Child("channel");
  if (!channel) throw Error("NotRss", "<rss> has no <channel>");
  std::vector<FeedItem> items;
  for (const XmlElement *el : channel->Children("item")) {
    auto text = [&](const char *name) {
      const XmlElement *c = el->Child(name);
      return c ? c->text : std::string();
    };
    FeedItem item;
    item.title = CollapseWhitespace(text("title"));
    item.description = HtmlToText(text("description"));
    item.link = Trim(text("link"));
    std::string date = Trim(text("pubDate"));
    if (!date.empty()) item.pub_date = ParseRfc822Date(date);
    item.guid = Trim(text("guid"));
    if (item.guid.empty()) item.guid = item.link;
    if (item.guid.empty()) item.guid = "hash:" + Hex64(Fnv1a64(item.title + "\n" + date));
    items.push_back(std::move(item));
  }
  return items;
}

std::vector<FeedItem> FetchFeed(const FeedSpec &spec, const HttpGetter &http) {
  HttpResponse resp = http(spec.url);
  if (resp.status < 200 || resp.status >= 300) throw FetchError(resp.status, spec.url);
  std::vector<FeedItem> items = ParseRss(resp.body);
  for (FeedItem &item : items) item.domain = spec.domain;
  return items;
}

// --- store ---

FeedStore::FeedStore(std::filesystem::path path) : path_(std::move(path)) {
  if (!std::filesystem::exists(path_)) return;
  TruncateTornTail(path_);
  std::string content = ReadFile(path_);
  size_t start = 0;
  int line_no = 0;
  while (start < content.size()) {
    size_t nl = content.find('\n', start);
    if (nl == std::string::npos) nl = content.size();
    std::string_view line(content.data() + start, nl - start);
    start = nl + 1;
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> f = SplitTabs(line);
    int64_t date = 0;
    if (f.size() != 6 || (!f[2].empty() && !ParseInt(f[2], date))) {
      throw Error("FeedStoreCorrupt",
                  path_.string() + " line " + std::to_string(line_no));
    }
    FeedItem item;
    item.guid = UnescapeField(f[0]);
    item.domain = UnescapeField(f[1]);
    if (!f[2].empty()) item.pub_date = date;
    item.link = UnescapeField(f[3]);
    item.title = UnescapeField(f[4]);
    item.description = UnescapeField(f[5]);
    if (item.guid.empty() || index_.count(item.guid)) {
      throw Error("FeedStoreCorrupt",
                  path_.string() + " line " + std::to_string(line_no));
    }
    index_[item.guid] = items_.size();
    items_.push_back(std::move(item));
  }
}

bool FeedStore::Append(const FeedItem &item) {
  if (item.guid.empty()) throw Error("InvalidArgument", "feed item without guid");
  if (Contains(item.guid)) return false;
  std::string line = EscapeField(item.guid) + "\t" + EscapeField(item.domain) +
                     "\t" + (item.pub_date ? std::to_string(*item.pub_date) : "") +
                     "\t" + EscapeField(item.link) + "\t" + EscapeField(item.title) +
                     "\t" + EscapeField(item.description) + "\n";
  std::filesystem::create_directories(path_.parent_path());
  AppendFile(path_, line);
  index_[item.guid] = items_.size();
  items_.push_back(item);
  return true;
}

SyncReport Sync(FeedStore &store, const std::vector<FeedSpec> &specs,
                const HttpGetter &http) {
  std::vector<std::future<std::vector<FeedItem>>> pending;
  pending.reserve(specs.size());
  for (const FeedSpec &spec : specs) {
    pending.push_back(std::async(std::launch::async,
                                 [&spec, &http] { return FetchFeed(spec, http); }));
  }
  SyncReport report;
  for (size_t i = 0; i < specs.size(); ++i) {
    std::vector<FeedItem> items;
    try {
      items = pending[i].get();
    } catch (const Error &e) {
      report.failed.push_back({specs[i].url, e.kind(), e.what()});
      continue;
    } catch (const std::exception &e) {
      report.failed.push_back({specs[i].url, "InternalError", e.what()});
      continue;
    }
    for (const FeedItem &item : items) {
      if (store.Append(item)) {
        ++report.new_items;
      } else {
        ++report.duplicates;
      }
    }
  }
  return report;
}

std::string FeedDocumentId(const std::string &guid) {
  return "feed-" + Hex64(Fnv1a64(guid));
}

Corpus ItemsToCorpus(const FeedStore &store, const std::string &domain,
                     Corpus corpus) {
  for (const FeedItem &item : store.items()) {
    if (item.domain != domain) continue;
    std::string id = FeedDocumentId(item.guid);
    if (corpus.Contains(id)) continue;
    Document doc;
    doc.id = id;
    doc.title = item.title;
    doc.body = item.title + "\n\n" + item.description;
    doc.source = DocumentSource{DocumentSource::Kind::kFeed, domain};
    corpus.Add(std::move(doc));
  }
  return corpus;
}

}  // namespace ontorich
