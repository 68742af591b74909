import { beforeEach, describe, expect, it } from "vitest";

import { ApiClient } from "../src/api";
import { App } from "../src/app";
import { MemoryStorage, StubOptions, stubService } from "./stub";

function mount(options: StubOptions = {}) {
  const stub = stubService(options);
  const storage = new MemoryStorage();
  const root = document.createElement("div");
  document.body.appendChild(root);
  const app = new App(new ApiClient("", stub.fetchFn), root, storage);
  return { app, root, stub, storage };
}

function setQuery(root: HTMLElement, text: string) {
  const box = root.querySelector<HTMLTextAreaElement>("#query")!;
  box.value = text;
}

function suggestionButtons(root: HTMLElement) {
  return [...root.querySelectorAll<HTMLButtonElement>("button.suggestion")];
}

function resultRows(root: HTMLElement) {
  return [...root.querySelectorAll<HTMLElement>(".result-row")];
}

beforeEach(() => {
  document.body.innerHTML = "";
});

describe("search flow", () => {
  it("renders suggestions, then results after a category click", async () => {
    const { app, root, stub } = mount();
    setQuery(root, "conference about interactive retrieval");
    await app.search(false);

    const buttons = suggestionButtons(root);
    expect(buttons.map((b) => b.dataset.categoryId)).toEqual([
      "information_retrieval",
      "machine_learning",
    ]);
    expect(resultRows(root)).toHaveLength(0); // results wait for a selection

    buttons[0].click();
    await app.selectCategory("information_retrieval");

    const rows = resultRows(root);
    expect(rows.map((r) => r.querySelector(".person-link")!.textContent)).toEqual([
      "Alice Reed",
      "Bob Stone",
      "Carol Diaz",
    ]);
    const expertCall = stub.calls.find((c) => c.url.startsWith("/experts"))!;
    expect(expertCall.url).toContain("category=information_retrieval");
  });

  it("lucky mode skips suggestions and queries the rank-1 category", async () => {
    const { app, root, stub } = mount();
    setQuery(root, "interactive retrieval");
    await app.search(true);

    expect(suggestionButtons(root)).toHaveLength(0);
    expect(resultRows(root)).toHaveLength(3);
    const expertCall = stub.calls.find((c) => c.url.startsWith("/experts"))!;
    expect(expertCall.url).toContain("category=information_retrieval");
  });

  it("shows guidance when no categories match", async () => {
    const { app, root } = mount({ suggestions: [] });
    setQuery(root, "zzz");
    await app.search(false);
    expect(root.querySelector("#suggestions .guidance")!.textContent).toMatch(
      /No categories matched/,
    );
  });

  it("shows a banner on service errors without crashing", async () => {
    const { app, root } = mount({ failWith: 500 });
    setQuery(root, "anything");
    await app.search(false);
    expect(root.querySelector("#banner .banner")!.textContent).toContain("500");
  });

  it("re-running the same search renders an identical list", async () => {
    const { app, root } = mount();
    setQuery(root, "interactive retrieval");
    await app.search(true);
    const first = root.querySelector("#results")!.innerHTML;
    await app.search(true);
    expect(root.querySelector("#results")!.innerHTML).toBe(first);
  });
});

describe("status checkboxes", () => {
  it("map exactly to the status query parameter", async () => {
    const { app, root, stub } = mount();
    const boxes = [...root.querySelectorAll<HTMLInputElement>("#status-boxes input")];
    expect(boxes.map((b) => b.value)).toEqual([
      "professor",
      "postdoc",
      "phd_student",
      "other",
    ]);
    boxes[0].click(); // professor
    boxes[2].click(); // phd_student
    setQuery(root, "interactive retrieval");
    await app.search(true);
    const url = stub.calls.find((c) => c.url.startsWith("/experts"))!.url;
    const params = new URLSearchParams(url.split("?")[1]);
    expect(params.get("status")).toBe("professor,phd_student");
  });

  it("all four unchecked means no status parameter", async () => {
    const { app, root, stub } = mount();
    setQuery(root, "interactive retrieval");
    await app.search(true);
    const url = stub.calls.find((c) => c.url.startsWith("/experts"))!.url;
    expect(url).not.toContain("status=");
  });
});

describe("vote flow", () => {
  async function mountWithResults(options: StubOptions = {}) {
    const mounted = mount(options);
    setQuery(mounted.root, "interactive retrieval");
    await mounted.app.search(true);
    return mounted;
  }

  it("sends the stored voter token and renders the returned tally", async () => {
    const { app, root, stub, storage } = await mountWithResults({
      tallies: { "a:bob_stone": 2 },
    });
    const row = resultRows(root)[1];
    row.querySelector<HTMLButtonElement>(".vote-up")!.click();
    await app.vote("a:bob_stone", 1); // awaits the queued click too

    const token = storage.getItem("expertnet.voter_token")!;
    expect(stub.voteBodies.every((v) => v.voter_token === token)).toBe(true);
    // badge shows the server's number (2 + two queued +1 votes), never a local guess
    const badge = resultRows(root)[1].querySelector(".tally")!;
    expect(badge.textContent).toBe(String(stub.tallies["a:bob_stone"]));
  });

  it("never fabricates a tally before the server answers", async () => {
    const { root } = await mountWithResults();
    for (const row of resultRows(root)) {
      expect(row.querySelector(".tally")!.textContent).toBe("");
    }
  });

  it("renders the replacement tally after an opposite vote", async () => {
    const { app, root } = await mountWithResults();
    await app.vote("a:carol_diaz", 1);
    expect(resultRows(root)[2].querySelector(".tally")!.textContent).toBe("1");
    await app.vote("a:carol_diaz", -1);
    expect(resultRows(root)[2].querySelector(".tally")!.textContent).toBe("0");
  });

  it("marks rows unavailable on a 404 vote", async () => {
    const gone = [{
      person_id: "a:gone_person", name: "Gone Person", status: "other",
      score: 0.5, rank: 1,
    }];
    const { app, root } = await mountWithResults({
      experts: { information_retrieval: gone },
    });
    await app.vote("a:gone_person", 1);
    expect(resultRows(root)[0].classList.contains("unavailable")).toBe(true);
  });
});

describe("person detail", () => {
  it("renders interests, publications and tally from the service", async () => {
    const persons = {
      "a:alice_reed": {
        name: "Alice Reed",
        status: "professor",
        research_interests: ["information retrieval", "ranking"],
        publications: [
          { pub_id: "ir001", title: "Ranked retrieval at desk scale",
            journal: "Journal of Information Retrieval", category_id: "information_retrieval",
            reader_count: 120 },
        ],
        vote_tally: 3,
      },
    };
    const { app, root } = mount({ persons });
    setQuery(root, "interactive retrieval");
    await app.search(true);
    await app.openPerson("a:alice_reed");

    const results = root.querySelector("#results")!;
    expect(results.querySelector("h2")!.textContent).toBe("Alice Reed");
    expect(results.textContent).toContain("information retrieval, ranking");
    expect(results.textContent).toContain("Vote tally: 3");
    expect(results.querySelectorAll(".publications li")).toHaveLength(1);

    results.querySelector<HTMLButtonElement>("button.back")!.click();
    expect(resultRows(root).length).toBe(3);
  });
});
