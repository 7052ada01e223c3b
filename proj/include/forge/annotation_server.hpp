#pragma once

#include <memory>
#include <string>

#include "forge/annotation.hpp"

namespace httplib {
class Server;
}

namespace forge {

class AnnotationServer {
public:
    // `ui_dir`, when non-empty, is served under /ui/.
    explicit AnnotationServer(AnnotationStore& store, std::string ui_dir = {});
    ~AnnotationServer();

    // Binds and serves until stop(). Returns false if the bind fails.
    bool listen(const std::string& host, int port);
    // Binds to a free port and returns it, or -1.
    int bind_any(const std::string& host);
    bool serve_bound();
    void stop();
    void wait_until_ready() const;

private:
    AnnotationStore& store_;
    std::unique_ptr<httplib::Server> http_;
};

}  // namespace forge
