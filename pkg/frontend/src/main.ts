import "./style.css";
import { WinWinApi } from "./api";
import { initConsole } from "./console";

// Same-origin by default (the service can host the built console); a
// ?api=http://127.0.0.1:8080 query parameter points elsewhere during dev.
const baseUrl = new URLSearchParams(window.location.search).get("api") ?? "";
initConsole(document.getElementById("app")!, new WinWinApi(baseUrl));
