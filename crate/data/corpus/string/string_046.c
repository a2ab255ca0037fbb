// count words in a line
int main()
{
    char word[2000];
    int i, wc = 0, inside = 0;
    fgets(word, sizeof(word), stdin);
    for (i = 0; word[i] != '\0'; i++) {
        if (word[i] == ' ' || word[i] == '\n' || word[i] == '\t')
            inside = 0;
        else if (!inside) {
            inside = 1;
            wc++;
        }
    }
    printf("%d\n", wc);
    return 0;
}
