import { ApiClient } from "../src/api.js";
import { DEMO_DATA } from "../src/demoData.js";
import { createMockService, MockService } from "../src/mock.js";

export function freshMock(): { mock: MockService; client: ApiClient } {
  const mock = createMockService(DEMO_DATA);
  return { mock, client: new ApiClient("", mock.fetchFn) };
}

/** Let queued promise callbacks run (the mock resolves synchronously but
 * panel rendering chains a few awaits). */
export async function flush(rounds = 6): Promise<void> {
  for (let i = 0; i < rounds; i++) {
    await new Promise((resolve) => setTimeout(resolve, 0));
  }
}

export function mount(): HTMLElement {
  const host = document.createElement("div");
  document.body.appendChild(host);
  return host;
}

export { DEMO_DATA };
