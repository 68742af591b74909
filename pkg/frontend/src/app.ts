// Application shell: query box, Search / I'm Feeling Lucky, the four
// status checkboxes, suggestion list, ranked results with vote icons,
// person detail. One search in flight at a time; votes run FIFO.

import { ApiClient, ApiError } from "./api";
import {
  STATUSES,
  UiState,
  ensureVoterToken,
  initialState,
  statusParam,
} from "./state";
import {
  clear,
  renderBanner,
  renderMessage,
  renderPerson,
  renderResults,
  renderSuggestions,
} from "./view";

export class App {
  readonly state: UiState;
  private searchBusy = false;
  private voteQueue: Promise<void> = Promise.resolve();

  private queryInput!: HTMLTextAreaElement;
  private suggestionsEl!: HTMLElement;
  private resultsEl!: HTMLElement;
  private bannerEl!: HTMLElement;

  constructor(
    private api: ApiClient,
    private root: HTMLElement,
    storage: Pick<Storage, "getItem" | "setItem">,
  ) {
    this.state = initialState(ensureVoterToken(storage));
    this.buildSkeleton();
  }

  private buildSkeleton(): void {
    clear(this.root);

    const form = document.createElement("div");
    form.className = "search-form";

    this.queryInput = document.createElement("textarea");
    this.queryInput.id = "query";
    this.queryInput.rows = 4;
    this.queryInput.placeholder =
      "Paste a job description, call for papers, or topic text…";

    const searchBtn = document.createElement("button");
    searchBtn.type = "button";
    searchBtn.id = "search";
    searchBtn.textContent = "Search";
    searchBtn.addEventListener("click", () => void this.search(false));

    const luckyBtn = document.createElement("button");
    luckyBtn.type = "button";
    luckyBtn.id = "lucky";
    luckyBtn.textContent = "I'm Feeling Lucky";
    luckyBtn.addEventListener("click", () => void this.search(true));

    const boxes = document.createElement("fieldset");
    boxes.id = "status-boxes";
    const legend = document.createElement("legend");
    legend.textContent = "Academic status";
    boxes.appendChild(legend);
    for (const status of STATUSES) {
      const label = document.createElement("label");
      const box = document.createElement("input");
      box.type = "checkbox";
      box.value = status;
      box.addEventListener("change", () => {
        this.state.checks[status] = box.checked;
      });
      label.append(box, document.createTextNode(" " + status.replace("_", " ")));
      boxes.appendChild(label);
    }

    this.bannerEl = document.createElement("div");
    this.bannerEl.id = "banner";
    this.suggestionsEl = document.createElement("div");
    this.suggestionsEl.id = "suggestions";
    this.resultsEl = document.createElement("div");
    this.resultsEl.id = "results";

    form.append(this.queryInput, searchBtn, luckyBtn, boxes);
    this.root.append(form, this.bannerEl, this.suggestionsEl, this.resultsEl);
  }

  private showError(err: unknown): void {
    const text =
      err instanceof ApiError
        ? `Service error ${err.status}: ${err.message}`
        : "Service unreachable.";
    renderBanner(this.bannerEl, text);
  }

  async search(lucky: boolean): Promise<void> {
    if (this.searchBusy) return;
    this.searchBusy = true;
    try {
      renderBanner(this.bannerEl, null);
      this.state.query = this.queryInput.value;
      const suggestions = await this.api.categorize(this.state.query);
      this.state.suggestions = suggestions;
      if (!suggestions.length) {
        clear(this.resultsEl);
        renderMessage(
          this.suggestionsEl,
          "No categories matched; try a longer or more specific description.",
        );
        return;
      }
      if (lucky) {
        clear(this.suggestionsEl);
        await this.showExperts(suggestions[0].category_id);
      } else {
        renderSuggestions(this.suggestionsEl, suggestions, (categoryId) =>
          void this.selectCategory(categoryId),
        );
        clear(this.resultsEl);
      }
    } catch (err) {
      this.showError(err);
    } finally {
      this.searchBusy = false;
    }
  }

  async selectCategory(categoryId: string): Promise<void> {
    try {
      renderBanner(this.bannerEl, null);
      await this.showExperts(categoryId);
    } catch (err) {
      this.showError(err);
    }
  }

  private async showExperts(categoryId: string): Promise<void> {
    const results = await this.api.experts(categoryId, statusParam(this.state.checks));
    this.state.selectedCategory = categoryId;
    this.state.results = results;
    this.renderResults();
  }

  private renderResults(): void {
    renderResults(this.resultsEl, this.state.results, this.state.tallies,
                  this.state.unavailable, {
      onVote: (personId, delta) => this.vote(personId, delta),
      onOpenPerson: (personId) => void this.openPerson(personId),
    });
  }

  vote(personId: string, delta: 1 | -1): Promise<void> {
    this.voteQueue = this.voteQueue.then(async () => {
      try {
        const tally = await this.api.vote(personId, delta, this.state.voterToken);
        this.state.tallies.set(personId, tally);
        this.renderResults();
      } catch (err) {
        if (err instanceof ApiError && err.status === 404) {
          this.state.unavailable.add(personId);
          this.renderResults();
        } else {
          this.showError(err);
        }
      }
    });
    return this.voteQueue;
  }

  async openPerson(personId: string): Promise<void> {
    try {
      const detail = await this.api.person(personId);
      renderPerson(this.resultsEl, detail, () => this.renderResults());
    } catch (err) {
      this.showError(err);
    }
  }
}

export function mountApp(
  root: HTMLElement,
  api: ApiClient = new ApiClient(""),
  storage: Pick<Storage, "getItem" | "setItem"> = window.localStorage,
): App {
  return new App(api, root, storage);
}
