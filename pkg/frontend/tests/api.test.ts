import { describe, expect, it } from "vitest";

import { ApiClient, ApiError } from "../src/api.js";

function capture(responder: (path: string, init?: RequestInit) => Response) {
  const calls: Array<{ path: string; init?: RequestInit }> = [];
  const client = new ApiClient("http://svc", async (path, init) => {
    calls.push({ path, init });
    return responder(path, init);
  });
  return { client, calls };
}

const ok = (body: unknown) =>
  new Response(JSON.stringify(body), { status: 200 });

describe("ApiClient", () => {
  it("prefixes the base URL on every route", async () => {
    const { client, calls } = capture(() => ok([]));
    await client.getSuspicious();
    await client.getSlang();
    await client.getConfig();
    expect(calls.map((c) => c.path)).toEqual([
      "http://svc/api/suspicious",
      "http://svc/api/lexicon/slang",
      "http://svc/api/config",
    ]);
  });

  it("posts filter requests as JSON", async () => {
    const { client, calls } = capture(() => ok({ verdict: "Clean" }));
    await client.filterText("some text");
    expect(calls[0].init?.method).toBe("POST");
    expect(JSON.parse(String(calls[0].init?.body))).toEqual({ text: "some text" });
  });

  it("URL-encodes the word in decision routes", async () => {
    const { client, calls } = capture(() => ok({}));
    await client.decide("it's", "dismiss");
    expect(calls[0].path).toBe("http://svc/api/suspicious/it's/decision");
    await client.decide("a/b", "confirm");
    expect(calls[1].path).toBe("http://svc/api/suspicious/a%2Fb/decision");
  });

  it("raises ApiError carrying the service's detail message", async () => {
    const { client } = capture(
      () => new Response(JSON.stringify({ detail: "no such word" }),
                         { status: 404 }),
    );
    await expect(client.decide("ghost", "confirm")).rejects.toThrowError(ApiError);
    await expect(client.decide("ghost", "confirm")).rejects.toThrow("no such word");
  });

  it("falls back to the HTTP status for non-JSON errors", async () => {
    const { client } = capture(() => new Response("boom", { status: 500 }));
    await expect(client.getSuspicious()).rejects.toThrow(/HTTP 500|Internal/);
  });
});
