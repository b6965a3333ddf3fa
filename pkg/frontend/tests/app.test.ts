import { beforeEach, describe, expect, it } from "vitest";

import { ApiClient } from "../src/api.js";
import { App } from "../src/app.js";
import { FakeService } from "./fake_service.js";

let service: FakeService;
let app: App;

beforeEach(async () => {
  service = new FakeService();
  app = new App(new ApiClient("", service.fetchFn));
  await app.start();
});

describe("queue view", () => {
  it("renders the seeded queue: four rows at 10 / 50", () => {
    const html = app.render();
    expect(html.match(/<tr data-word=/g)).toHaveLength(4);
    expect(html.match(/10 \/ 50/g)).toHaveLength(4);
    expect(html.match(/width: 20%/g)).toHaveLength(4);
  });

  it("confirming kalphaa removes its row and the lexicon gains it", async () => {
    await app.decide("kalphaa", "confirm");
    expect(app.render()).not.toContain(`data-word="kalphaa"`);
    expect(app.render().match(/<tr data-word=/g)).toHaveLength(3);

    await app.show("lexicon");
    expect(app.render()).toContain("kalphaa");
  });

  it("dismissing keeps the row and badges it", async () => {
    await app.decide("kalphaa", "dismiss");
    const html = app.render();
    expect(html).toContain(`data-word="kalphaa"`);
    expect(html).toContain("dismissed");
  });

  it("the rendered queue always equals a fresh fetch after a decision", async () => {
    await app.decide("bbbbetaa", "confirm");
    const words = [...app.render().matchAll(/<tr data-word="(\w+)"/g)].map(
      (m) => m[1],
    );
    expect(words).toEqual(service.suspicious.map((r) => r.word));
  });

  it("deciding on a vanished word surfaces the API error inline", async () => {
    await app.decide("kalphaa", "confirm");
    await app.decide("kalphaa", "confirm"); // now stale
    const html = app.render();
    expect(html).toContain("error-banner");
    expect(html).toContain("no suspicious record");
    // queue content is still the server truth, not wiped by the failure
    expect(html.match(/<tr data-word=/g)).toHaveLength(3);
  });
});

describe("try-it view", () => {
  it("reproduces the Blocked verdict for alpha", async () => {
    await app.show("tryit");
    const report = await app.tryFilter("alpha");
    expect(report?.verdict).toBe("Blocked");
    const html = app.render();
    expect(html).toContain(">Blocked<");
    expect(html).toContain("alpha");
  });

  it("clean text renders a Clean banner", async () => {
    await app.show("tryit");
    await app.tryFilter("a perfectly ordinary note");
    expect(app.render()).toContain(">Clean<");
  });

  it("refetches the queue after filtering", async () => {
    await app.show("tryit");
    service.requests.length = 0;
    await app.tryFilter("anything");
    const paths = service.requests.map((r) => `${r.method} ${r.path}`);
    expect(paths).toContain("POST /api/filter");
    expect(paths).toContain("GET /api/suspicious");
  });
});

describe("error states", () => {
  it("an unreachable service yields an error banner with a retry affordance", async () => {
    const down = new ApiClient("", async () => {
      throw new Error("connection refused");
    });
    const offline = new App(down);
    await offline.start();
    const html = offline.render();
    expect(html).toContain("error-banner");
    expect(html).toContain("connection refused");
    expect(html).toContain(`data-action="retry"`);
  });

  it("refresh clears a stale error once the service answers", async () => {
    let failing = true;
    const flaky = new FakeService();
    const client = new ApiClient("", async (input, init) => {
      if (failing) throw new Error("connection refused");
      return flaky.fetchFn(input, init);
    });
    const recovering = new App(client);
    await recovering.start();
    expect(recovering.render()).toContain("error-banner");

    failing = false;
    await recovering.start();
    await recovering.refresh();
    expect(recovering.render()).not.toContain("error-banner");
    expect(recovering.render().match(/<tr data-word=/g)).toHaveLength(4);
  });
});
