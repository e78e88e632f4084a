from fastapi import FastAPI

from . import config
from .routers import automorphisms, languages, repro

app = FastAPI(title="lamina", redirect_slashes=False)

# Include routers
app.include_router(languages.router)
app.include_router(automorphisms.router)
app.include_router(repro.router)


@app.get("/")
def read_root():
    return {"message": "Laminations on free groups api"}


if __name__ == "__main__":
    import uvicorn

    uvicorn.run(app, host=config.API_HOST, port=config.API_PORT)
