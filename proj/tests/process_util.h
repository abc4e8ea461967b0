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

#ifndef ONTORICH_TESTS_PROCESS_UTIL_H_
#define ONTORICH_TESTS_PROCESS_UTIL_H_

#include <fcntl.h>
#include <spawn.h>
#include <sys/wait.h>
#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

extern char **environ;

namespace testutil {

struct ProcessResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

// Starts `argv` with stdout and stderr redirected to files in `scratch`
// and stdin from /dev/null. Returns the child pid.
inline pid_t SpawnProcess(const std::vector<std::string> &argv,
                          const std::filesystem::path &scratch) {
  std::filesystem::create_directories(scratch);
  std::string out_path = (scratch / "stdout").string();
  std::string err_path = (scratch / "stderr").string();
  posix_spawn_file_actions_t actions;
  posix_spawn_file_actions_init(&actions);
  posix_spawn_file_actions_addopen(&actions, 0, "/dev/null", O_RDONLY, 0);
  posix_spawn_file_actions_addopen(&actions, 1, out_path.c_str(),
                                   O_WRONLY | O_CREAT | O_TRUNC, 0644);
  posix_spawn_file_actions_addopen(&actions, 2, err_path.c_str(),
                                   O_WRONLY | O_CREAT | O_TRUNC, 0644);
  std::vector<char *> args;
  for (const auto &a : argv) args.push_back(const_cast<char *>(a.c_str()));
  args.push_back(nullptr);
  pid_t pid;
  int rc = posix_spawn(&pid, args[0], &actions, nullptr, args.data(), environ);
  posix_spawn_file_actions_destroy(&actions);
  if (rc != 0) throw std::runtime_error("spawn failed: " + argv[0]);
  return pid;
}

inline std::string Slurp(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Waits for `pid` and returns its exit code, or 128 + signal.
inline int WaitProcess(pid_t pid) {
  int status = 0;
  while (waitpid(pid, &status, 0) < 0) {
  }
  return WIFEXITED(status) ? WEXITSTATUS(status) : 128 + WTERMSIG(status);
}

// Runs `argv` to completion and captures its output.
inline ProcessResult RunProcess(const std::vector<std::string> &argv,
                                const std::filesystem::path &scratch) {
  pid_t pid = SpawnProcess(argv, scratch);
  ProcessResult result;
  result.exit_code = WaitProcess(pid);
  result.out = Slurp(scratch / "stdout");
  result.err = Slurp(scratch / "stderr");
  return result;
}

}  // namespace testutil

#endif  // ONTORICH_TESTS_PROCESS_UTIL_H_
