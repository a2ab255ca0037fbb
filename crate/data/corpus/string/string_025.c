int my_strlen(const char *word)
{
    int len = 0;
    while (word[len] != '\0')
        len++;
    return len;
}

int main()
{
    char word[1000];
    scanf("%s", word);
    printf("%d\n", my_strlen(word));
    return 0;
}
