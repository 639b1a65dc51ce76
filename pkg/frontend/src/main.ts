/** Browser entry point.  `#demo` (or a missing service) runs against the
 * bundled fixture payloads so the explorer works stand-alone. */

import { App } from "./app.js";
import { createMockService } from "./mock.js";

const root = document.getElementById("app");
if (root) {
  const demo = window.location.hash.includes("demo");
  const app = new App(root, {
    baseUrl: demo ? "" : (document.body.dataset.serviceUrl ?? ""),
    fetchFn: demo ? createMockService().fetchFn : undefined,
  });
  void app.start();
}
