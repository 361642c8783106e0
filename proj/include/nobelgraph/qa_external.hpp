#pragma once

// Bridge to a translator living outside this process: an HTTP service or a
// local command. Kept out of qa.hpp so only the code that actually talks to
// an external endpoint pays for the network stack.

#include <fcntl.h>
#include <poll.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <csignal>
#include <cstdlib>
#include <string>
#include <thread>
#include <utility>

#include <httplib.h>

#include "nobelgraph/errors.hpp"
#include "nobelgraph/qa.hpp"
#include "nobelgraph/qagen.hpp"
#include "nobelgraph/strings.hpp"

namespace nobelgraph::qa {

inline constexpr const char* kEndpointEnvVar = "NOBELGRAPH_TRANSLATOR_ENDPOINT";

// Delegates translation to a configured endpoint. An endpoint starting with
// http:// or https:// is POSTed to; any other value runs as a shell command.
// Both receive the full prompt — schema plus question in the fine-tune
// format — and reply with Cypher text (HTTP body / stdout). Each attempt has
// a deadline, and a failed attempt is retried once.
class ExternalTranslator final : public Translator {
  public:
    explicit ExternalTranslator(std::string endpoint,
                                std::chrono::seconds timeout = std::chrono::seconds(30))
        : endpoint_(std::move(endpoint)), timeout_(timeout) {
        if (strings::trim_ascii(endpoint_).empty())
            throw UserError("external translator endpoint is empty");
    }

    static ExternalTranslator from_env(const char* var = kEndpointEnvVar) {
        const char* value = std::getenv(var);
        if (value == nullptr || *value == '\0')
            throw UserError(std::string("environment variable ") + var +
                            " is not set; it must hold the translator endpoint");
        return ExternalTranslator(value);
    }

    std::string name() const override { return "external"; }

    Translation translate(const std::string& question, const std::string& schema_text) override {
        const std::string prompt = qagen::make_prompt(schema_text, question);
        const bool http = endpoint_.starts_with("http://") || endpoint_.starts_with("https://");
        std::string failure;
        for (int attempt = 0; attempt < 2; ++attempt) {
            Translation t = http ? post_http(prompt) : run_process(prompt);
            if (t.cypher) return t;
            failure = std::move(t.error);
        }
        return Translation::fail(failure + " (after retry)");
    }

  private:
    Translation post_http(const std::string& prompt) const {
        std::string base = endpoint_;
        std::string path = "/";
        std::size_t host_start = endpoint_.find("://") + 3;
        std::size_t slash = endpoint_.find('/', host_start);
        if (slash != std::string::npos) {
            base = endpoint_.substr(0, slash);
            path = endpoint_.substr(slash);
        }
        try {
            httplib::Client client(base);
            client.set_connection_timeout(static_cast<time_t>(timeout_.count()), 0);
            client.set_read_timeout(static_cast<time_t>(timeout_.count()), 0);
            client.set_write_timeout(static_cast<time_t>(timeout_.count()), 0);
            httplib::Result res = client.Post(path, prompt, "text/plain");
            if (!res)
                return Translation::fail("http request failed: " + httplib::to_string(res.error()));
            if (res->status != 200)
                return Translation::fail("http status " + std::to_string(res->status));
            std::string body(strings::trim_ascii(res->body));
            if (body.empty()) return Translation::fail("empty response body");
            return Translation::ok(std::move(body));
        } catch (const std::exception& e) {
            return Translation::fail(std::string("http client error: ") + e.what());
        }
    }

    Translation run_process(const std::string& prompt) const {
        // writes to a pipe whose reader is gone must come back as EPIPE, not
        // kill the process
        static const bool sigpipe_ignored = [] {
            std::signal(SIGPIPE, SIG_IGN);
            return true;
        }();
        (void)sigpipe_ignored;

        int to_child[2];
        int from_child[2];
        if (pipe(to_child) != 0) return Translation::fail("pipe failed");
        if (pipe(from_child) != 0) {
            close(to_child[0]);
            close(to_child[1]);
            return Translation::fail("pipe failed");
        }

        pid_t pid = fork();
        if (pid < 0) {
            close(to_child[0]);
            close(to_child[1]);
            close(from_child[0]);
            close(from_child[1]);
            return Translation::fail("fork failed");
        }
        if (pid == 0) {
            // own process group, so a timeout can reap the whole command tree
            setpgid(0, 0);
            dup2(to_child[0], STDIN_FILENO);
            dup2(from_child[1], STDOUT_FILENO);
            close(to_child[0]);
            close(to_child[1]);
            close(from_child[0]);
            close(from_child[1]);
            execl("/bin/sh", "sh", "-c", endpoint_.c_str(), static_cast<char*>(nullptr));
            _exit(127);
        }
        close(to_child[0]);
        close(from_child[1]);
        setpgid(pid, pid); // mirrors the child's call; losing the race is fine
        int in_fd = to_child[1];
        int out_fd = from_child[0];
        fcntl(in_fd, F_SETFL, O_NONBLOCK);
        fcntl(out_fd, F_SETFL, O_NONBLOCK);

        const auto deadline = std::chrono::steady_clock::now() + timeout_;
        std::string reply;
        std::size_t written = 0;
        bool timed_out = false;
        while (out_fd >= 0) {
            if (in_fd >= 0 && written == prompt.size()) {
                close(in_fd);
                in_fd = -1;
            }
            struct pollfd fds[2];
            nfds_t n = 0;
            int read_slot = -1;
            int write_slot = -1;
            if (out_fd >= 0) {
                fds[n] = {out_fd, POLLIN, 0};
                read_slot = static_cast<int>(n++);
            }
            if (in_fd >= 0) {
                fds[n] = {in_fd, POLLOUT, 0};
                write_slot = static_cast<int>(n++);
            }
            auto remaining = std::chrono::duration_cast<std::chrono::milliseconds>(
                deadline - std::chrono::steady_clock::now());
            if (remaining.count() <= 0) {
                timed_out = true;
                break;
            }
            int rc = poll(fds, n, static_cast<int>(remaining.count()));
            if (rc < 0) {
                if (errno == EINTR) continue;
                break;
            }
            if (rc == 0) {
                timed_out = true;
                break;
            }
            if (write_slot >= 0 && (fds[write_slot].revents & (POLLOUT | POLLERR | POLLHUP))) {
                ssize_t w = write(in_fd, prompt.data() + written, prompt.size() - written);
                if (w > 0) {
                    written += static_cast<std::size_t>(w);
                } else if (w < 0 && errno != EINTR && errno != EAGAIN) {
                    // the command stopped reading; that is its prerogative
                    close(in_fd);
                    in_fd = -1;
                }
            }
            if (read_slot >= 0 && (fds[read_slot].revents & (POLLIN | POLLERR | POLLHUP))) {
                char buf[4096];
                ssize_t r = read(out_fd, buf, sizeof buf);
                if (r > 0) {
                    reply.append(buf, static_cast<std::size_t>(r));
                } else if (r == 0 || (r < 0 && errno != EINTR && errno != EAGAIN)) {
                    close(out_fd);
                    out_fd = -1;
                }
            }
        }
        if (in_fd >= 0) close(in_fd);
        if (out_fd >= 0) close(out_fd);

        int status = 0;
        bool exited = false;
        while (!timed_out) {
            pid_t r = waitpid(pid, &status, WNOHANG);
            if (r != 0) {
                exited = true;
                break;
            }
            if (std::chrono::steady_clock::now() >= deadline) break;
            std::this_thread::sleep_for(std::chrono::milliseconds(5));
        }
        if (!exited) {
            kill(-pid, SIGKILL);
            waitpid(pid, &status, 0);
            return Translation::fail("external process timed out");
        }
        if (!WIFEXITED(status) || WEXITSTATUS(status) != 0)
            return Translation::fail(
                "external process failed with status " +
                std::to_string(WIFEXITED(status) ? WEXITSTATUS(status) : -1));
        std::string body(strings::trim_ascii(reply));
        if (body.empty()) return Translation::fail("external process produced no output");
        return Translation::ok(std::move(body));
    }

    std::string endpoint_;
    std::chrono::seconds timeout_;
};

} // namespace nobelgraph::qa
