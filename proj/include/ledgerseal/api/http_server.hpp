/*
   Copyright 2026 The LedgerSeal Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef LEDGERSEAL_API_HTTP_SERVER_HPP_
#define LEDGERSEAL_API_HTTP_SERVER_HPP_

#include <memory>
#include <string>
#include <string_view>
#include <thread>

#include <ledgerseal/api/service.hpp>
#include <ledgerseal/common/error.hpp>

namespace httplib {
class Server;
}

namespace ledgerseal::api {

struct HttpError {
    int status{500};
    std::string_view code;
};

//! Error code -> (HTTP status, machine code) used in {"error":{"code","message"}}.
HttpError map_error(ErrorCode code) noexcept;

/// HTTP/1.1 JSON facade over a ReviewService.
///
///   POST /api/v1/reviews                  {"uid","text"} -> 201
///   GET  /api/v1/reviews/{uid}
///   POST /api/v1/reviews/{uid}/verify     optional {"text"}; verdicts are always 200
///   GET  /api/v1/transactions/{tx_hash}
///   GET  /api/v1/gas/report?sizes=...
///   GET  /healthz
class HttpServer {
  public:
    explicit HttpServer(std::shared_ptr<ReviewService> service);
    ~HttpServer();

    HttpServer(const HttpServer&) = delete;
    HttpServer& operator=(const HttpServer&) = delete;

    //! Port 0 picks a free port. Returns the bound port. Throws Error{kConfigError}.
    int bind(const std::string& host, int port);

    //! Serves on the calling thread until stop().
    void run();

    //! run() on a background thread.
    void start();

    //! Idempotent; joins the background thread if any.
    void stop();

    [[nodiscard]] int port() const noexcept { return port_; }

  private:
    void register_routes();

    std::shared_ptr<ReviewService> service_;
    std::unique_ptr<httplib::Server> server_;
    std::thread thread_;
    int port_{0};
};

}  // namespace ledgerseal::api

#endif  // LEDGERSEAL_API_HTTP_SERVER_HPP_
