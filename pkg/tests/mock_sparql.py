"""Scripted SPARQL endpoint on a local thread, for harvester and CLI tests."""

import json
import re
import threading
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from urllib.parse import parse_qs, urlparse

WD = "http://www.wikidata.org/entity/"


def binding(i, qual=None):
    b = {
        "artwork": {"type": "uri", "value": f"{WD}Q{1000 + i}"},
        "artworkLabel": {"type": "literal", "value": f"Painting {i}"},
        "element": {"type": "uri", "value": f"{WD}Q{2000 + i}"},
        "elementLabel": {"type": "literal", "value": f"thing {i}"},
        "types": {"type": "literal", "value": f"{WD}Q729|{WD}Q5"},
    }
    if qual:
        b["qualifierKind"] = {"type": "literal", "value": qual[0]}
        b["qualifierValue"] = {"type": "uri", "value": qual[1]}
    return b


class MockEndpoint:
    """Scripted SPARQL endpoint: serves ``rows`` by LIMIT/OFFSET."""

    def __init__(self):
        self.rows = []
        self.fail_first = 0
        self.fail_status = 503
        self.body = None
        self.status = 200
        self.requests = []
        mock = self

        class Handler(BaseHTTPRequestHandler):
            def log_message(self, *args):
                pass

            def do_GET(self):
                query = parse_qs(urlparse(self.path).query)["query"][0]
                mock.requests.append((query, self.headers.get("User-Agent")))
                if mock.fail_first > 0:
                    mock.fail_first -= 1
                    self.send_response(mock.fail_status)
                    self.end_headers()
                    return
                limit = int(re.search(r"LIMIT (\d+)", query).group(1))
                offset = int(re.search(r"OFFSET (\d+)", query).group(1))
                payload = mock.body
                if payload is None:
                    payload = json.dumps(
                        {"head": {"vars": []}, "results": {"bindings": mock.rows[offset:offset + limit]}}
                    )
                data = payload.encode()
                self.send_response(mock.status)
                self.send_header("Content-Type", "application/sparql-results+json")
                self.send_header("Content-Length", str(len(data)))
                self.end_headers()
                self.wfile.write(data)

        self.server = ThreadingHTTPServer(("127.0.0.1", 0), Handler)
        self.url = f"http://127.0.0.1:{self.server.server_address[1]}/sparql"
        self.thread = threading.Thread(target=self.server.serve_forever, daemon=True)
        self.thread.start()

    def close(self):
        self.server.shutdown()
        self.server.server_close()
